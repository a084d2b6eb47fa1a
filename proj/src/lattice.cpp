#include "kas3/lattice.hpp"

#include <sstream>

namespace kas3 {

CubicLattice cubic_lattice(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw PreconditionError("lattice dimensions must be >= 1");
  CubicLattice q;
  q.dims = {a, b, c};
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      for (int z = 0; z < c; ++z) ((x + y + z) % 2 == 0 ? q.even : q.odd).push_back({x, y, z});
  std::map<GridPoint, std::uint32_t> odd_index;
  for (std::uint32_t i = 0; i < q.odd.size(); ++i) odd_index[q.odd[i]] = i;
  std::vector<BipartiteGraph::Edge> edges;
  for (std::uint32_t i = 0; i < q.even.size(); ++i)
    for (int axis = 0; axis < 3; ++axis)
      for (int step : {-1, 1}) {
        GridPoint p = q.even[i];
        p[axis] += step;
        if (auto it = odd_index.find(p); it != odd_index.end()) edges.emplace_back(i, it->second);
      }
  q.graph = BipartiteGraph(q.even.size(), q.odd.size(), std::move(edges));
  return q;
}

DimerResult dimer_polynomial(const CubicLattice& q, const LatticeEdgeWeights& weights,
                             unsigned threads) {
  if (q.vertex_count() > kMaxDimerVertices)
    throw GuardExceeded("dimer_polynomial: " + std::to_string(q.vertex_count()) +
                        " vertices exceed " + std::to_string(kMaxDimerVertices));
  DimerResult out;
  out.odd_vertex_count = q.vertex_count() % 2 == 1;
  if (!q.balanced()) return out;

  auto weight = [&](const BipartiteGraph::Edge& e) {
    auto it = weights.find(e);
    const std::int64_t w = it == weights.end() ? 1 : it->second;
    if (w < 0) throw PreconditionError("lattice edge weights must be non-negative");
    return w;
  };
  const std::size_t n = q.even.size();
  Matrix<Polynomial> m(n, n);
  for (const auto& e : q.graph.edges) m(e.first, e.second) = Polynomial::monomial(weight(e));

  for (const auto& p : enumerate_bipartite_perfect_matchings(q.graph)) {
    std::int64_t total = 0;
    for (std::uint32_t a = 0; a < p.size(); ++a) total += weight({a, p[a]});
    out.direct.add_term(total, 1);
  }
  out.tensor = permanent3(build_T(m).tensor, threads);
  out.ryser = permanent2(m);
  return out;
}

namespace {

Point3 grid(const GridPoint& g) { return {Rational(g[0]), Rational(g[1]), Rational(g[2])}; }

Point3 offset(Point3 p, const std::array<Rational, 3>& d) {
  for (int i = 0; i < 3; ++i) p[i] += d[i];
  return p;
}

Point3 unit(int axis, const Rational& scale) {
  Point3 p{Rational(0), Rational(0), Rational(0)};
  p[axis] = scale;
  return p;
}

const std::array<Rational, 3> kNearA{Rational(1, 8), Rational(1, 16), Rational(1, 32)};
const std::array<Rational, 3> kNearB{Rational(1, 32), Rational(1, 8), Rational(1, 16)};

}  // namespace

EmbeddedComplex embed_T(const CubicLattice& q) {
  using namespace tnames;
  if (!q.balanced()) throw PreconditionError("embed_T needs a box with an even vertex count");
  EmbeddedComplex ec{build_T_skeleton(q.graph), {}};
  auto& at = ec.coordinates;
  for (std::size_t j = 1; j <= q.even.size(); ++j) {
    at[v(1, j)] = grid(q.even[j - 1]);
    at[v_prime(2, j)] = offset(grid(q.even[j - 1]), kNearA);
    at[w0(1, j)] = offset(grid(q.even[j - 1]), kNearB);
  }
  for (std::size_t j = 1; j <= q.odd.size(); ++j) {
    at[v(2, j)] = grid(q.odd[j - 1]);
    at[v_prime(1, j)] = offset(grid(q.odd[j - 1]), kNearA);
    at[w0(2, j)] = offset(grid(q.odd[j - 1]), kNearB);
  }
  const Rational eighth(1, 8);
  for (std::size_t k = 0; k < q.graph.edges.size(); ++k) {
    const auto [a, b] = q.graph.edges[k];
    const GridPoint& pa = q.even[a];
    const GridPoint& pb = q.odd[b];
    int axis = 0;
    while (pa[axis] == pb[axis]) ++axis;
    Point3 mid;
    for (int i = 0; i < 3; ++i) mid[i] = Rational(pa[i] + pb[i], 2);
    const int p1 = (axis + 1) % 3, p2 = (axis + 2) % 3;
    at[w(0, k + 1)] = offset(mid, unit(p1, eighth));
    at[w(2, k + 1)] = offset(mid, unit(p1, -eighth));
    at[w(1, k + 1)] = offset(mid, unit(p2, eighth));
  }
  const auto problems = embedding_problems(ec);
  if (!problems.empty()) throw InternalError("embed_T produced an invalid embedding: " + problems[0]);
  return ec;
}

std::vector<std::string> embedding_problems(const EmbeddedComplex& ec) {
  std::vector<std::string> problems;
  const auto& config = ec.config();
  std::map<Point3, Id> seen;
  for (const auto& v : config.vertices()) {
    auto it = ec.coordinates.find(v);
    if (it == ec.coordinates.end()) {
      problems.push_back("vertex " + v + " has no coordinates");
      continue;
    }
    auto [pos, fresh] = seen.emplace(it->second, v);
    if (!fresh) problems.push_back("vertices " + pos->second + " and " + v + " coincide");
  }
  if (!problems.empty()) return problems;
  for (Index t = 0; t < config.triangle_count(); ++t) {
    const auto vs = *config.triangle_vertices(t);
    const Point3& a = ec.coordinates.at(config.vertices()[vs[0]]);
    const Point3& b = ec.coordinates.at(config.vertices()[vs[1]]);
    const Point3& c = ec.coordinates.at(config.vertices()[vs[2]]);
    std::array<Rational, 3> u, w;
    for (int i = 0; i < 3; ++i) {
      u[i] = b[i] - a[i];
      w[i] = c[i] - a[i];
    }
    const Rational x = u[1] * w[2] - u[2] * w[1];
    const Rational y = u[2] * w[0] - u[0] * w[2];
    const Rational z = u[0] * w[1] - u[1] * w[0];
    if (x.is_zero() && y.is_zero() && z.is_zero())
      problems.push_back("triangle " + config.triangles()[t].id + " is degenerate");
  }
  return problems;
}

std::string dyadic_decimal(const Rational& v) {
  Integer num = numerator(v);
  Integer den = denominator(v);
  std::size_t k = 0;
  Integer scale = 1;
  while (den > 1) {
    if (den % 2 != 0) throw PreconditionError(to_string(v) + " is not dyadic");
    den /= 2;
    scale *= 5;
    ++k;
  }
  const bool negative = num < 0;
  if (negative) num = -num;
  num *= scale;
  Integer ten_k = 1;
  for (std::size_t i = 0; i < k; ++i) ten_k *= 10;
  std::string out = (negative ? "-" : "") + to_string(Integer(num / ten_k));
  if (k > 0) {
    std::string frac = to_string(Integer(num % ten_k));
    frac.insert(0, k - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return out;
}

std::string to_off(const EmbeddedComplex& ec) {
  const auto& config = ec.config();
  std::ostringstream os;
  os << "OFF\n" << config.vertex_count() << ' ' << config.triangle_count() << " 0\n";
  for (const auto& v : config.vertices()) {
    const Point3& p = ec.coordinates.at(v);
    os << dyadic_decimal(p[0]) << ' ' << dyadic_decimal(p[1]) << ' ' << dyadic_decimal(p[2]) << '\n';
  }
  for (Index t = 0; t < config.triangle_count(); ++t) {
    const auto vs = *config.triangle_vertices(t);
    os << "3 " << vs[0] << ' ' << vs[1] << ' ' << vs[2] << '\n';
  }
  return os.str();
}

}  // namespace kas3
