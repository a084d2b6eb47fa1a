#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kas3/binet_cauchy.hpp"
#include "kas3/gadgets.hpp"
#include "kas3/matching.hpp"
#include "kas3/tensor3.hpp"
#include "kas3/tensor_json.hpp"
#include "kas3/tripartition.hpp"
#include "support.hpp"

using namespace kas3;
using namespace kas3::testing;

namespace {

Tensor3<Integer> all_ones(std::size_t n) {
  Tensor3<Integer> a = Tensor3<Integer>::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) a.set(i, j, k, 1);
  return a;
}

Tensor3<Integer> diagonal(const std::vector<int>& v) {
  Tensor3<Integer> a = Tensor3<Integer>::cube(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) a.set(i, i, i, v[i]);
  return a;
}

// b(i,j,k) = a(p0[i], p1[j], p2[k])
Tensor3<Integer> relabel(const Tensor3<Integer>& a, const std::array<std::vector<std::size_t>, 3>& p) {
  Tensor3<Integer> b(a.dims()[0], a.dims()[1], a.dims()[2]);
  std::array<std::vector<std::size_t>, 3> inv;
  for (int ax = 0; ax < 3; ++ax) {
    inv[ax].resize(p[ax].size());
    for (std::size_t i = 0; i < p[ax].size(); ++i) inv[ax][p[ax][i]] = i;
  }
  for (const auto& [idx, v] : a.entries()) b.set(inv[0][idx[0]], inv[1][idx[1]], inv[2][idx[2]], v);
  return b;
}

int sign_of(const std::vector<std::size_t>& p) {
  std::vector<std::uint32_t> q(p.begin(), p.end());
  return permutation_sign(q);
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

BipartiteGraph random_bipartite(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<BipartiteGraph::Edge> e;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (static_cast<int>(rng() % 100) < density) e.emplace_back(a, b);
  return BipartiteGraph(n, n, e);
}

// Exhaustive over all 2^|E| signings.
bool brute_has_pfaffian_signing(const BipartiteGraph& g) {
  const Integer per = permanent2(biadjacency(g));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges.size()); ++mask) {
    EdgeSigning s;
    for (std::size_t i = 0; i < g.edges.size(); ++i) s.signs[g.edges[i]] = (mask >> i) & 1 ? -1 : 1;
    if (brute_permanent2(signed_biadjacency(g, s), true) == per) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("permanent3 and determinant3 examples") {
  Tensor3<Integer> one = Tensor3<Integer>::cube(1);
  one.set(0, 0, 0, 7);
  CHECK(permanent3(one) == 7);
  CHECK(determinant3(one) == 7);
  CHECK(permanent3(all_ones(2)) == 4);
  CHECK(determinant3(all_ones(2)) == 0);
  CHECK(determinant3_dense(all_ones(2)) == 0);
  CHECK(permanent3(all_ones(3)) == 36);
  CHECK(permanent3(diagonal({2, 3, 5})) == 30);
  CHECK(determinant3(diagonal({2, 3, 5})) == 30);
  CHECK(permanent3(Tensor3<Integer>::cube(0)) == 1);
  CHECK(permanent3(Tensor3<Integer>::cube(3)) == 0);

  Tensor3<Integer> flat(2, 2, 1);
  flat.set(0, 0, 0, 1);
  flat.set(1, 1, 0, 1);
  CHECK(permanent3(flat) == 0);
}

TEST_CASE("tensor storage") {
  Tensor3<Integer> a(2, 3, 1);
  a.set(1, 2, 0, 4);
  a.add(1, 2, 0, -4);
  CHECK(a.nonzero_count() == 0);
  CHECK_THROWS_AS(a.set(2, 0, 0, 1), PreconditionError);
  CHECK(a.padded().dims() == std::array<std::size_t, 3>{3, 3, 3});
  CHECK(permutation_sign(std::vector<std::uint32_t>{1, 0, 2}) == -1);
  CHECK(permutation_sign(std::vector<std::uint32_t>{1, 2, 0}) == 1);
}

TEST_CASE("sparse and dense paths agree on random tensors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_tensor<Integer>(rng, n, 20 + static_cast<int>(rng() % 70), -3, 3);
    CHECK(permanent3(a) == permanent3_dense(a));
    CHECK(determinant3(a) == determinant3_dense(a));
    CHECK(permanent3(a, 4) == permanent3(a, 1));
    CHECK(determinant3(a, 3) == determinant3(a, 1));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_tensor<Rational>(rng, 3, 60, -4, 4);
    Tensor3<Rational> b = a;
    for (const auto& [idx, v] : a.entries()) b.set(idx[0], idx[1], idx[2], v / 3);
    CHECK(permanent3(b) == permanent3_dense(b));
    CHECK(determinant3(b) == determinant3_dense(b));
  }
  CHECK_THROWS_AS(permanent3_dense(Tensor3<Integer>::cube(6)), GuardExceeded);
}

TEST_CASE("relabeling invariance and sign under transposition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto a = random_tensor<Integer>(rng, n, 60, -3, 3);
    const std::array<std::vector<std::size_t>, 3> p{random_perm(rng, n), random_perm(rng, n),
                                                    random_perm(rng, n)};
    const auto b = relabel(a, p);
    CHECK(permanent3(b) == permanent3(a));
    CHECK(determinant3(b) == sign_of(p[1]) * sign_of(p[2]) * determinant3(a));

    std::vector<std::size_t> swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    std::vector<std::size_t> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(determinant3(relabel(a, {ident, swap, ident})) == -determinant3(a));
    CHECK(determinant3(relabel(a, {ident, ident, swap})) == -determinant3(a));
    CHECK(determinant3(relabel(a, {swap, ident, ident})) == determinant3(a));
  }
}

TEST_CASE("non-negative tensors with only positive terms have det = per") {
  CHECK(determinant3(diagonal({1, 4, 9, 2})) == permanent3(diagonal({1, 4, 9, 2})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_tensor<Integer>(rng, 3, 40, 0, 3);
    bool positive = true;
    TermSearch<Integer>(a.padded()).visit_all([&](auto s1, auto s2, const Integer&) {
      positive = positive && permutation_sign(s1) * permutation_sign(s2) > 0;
    });
    if (positive) CHECK(determinant3(a) == permanent3(a));
  }
}

TEST_CASE("triadjacency") {
  SUBCASE("single rainbow triangle of weight 2") {
    const auto c = single_triangle();
    EdgeTripartition p;
    p.classes = {{"ab", 1}, {"bc", 2}, {"ac", 3}};
    Weighting w;
    w.weights["t1"] = 2;
    const auto a = triadjacency(c, p, w);
    CHECK(a.dims() == std::array<std::size_t, 3>{1, 1, 1});
    CHECK(a.at(0, 0, 0) == Polynomial::monomial(2));
  }
  SUBCASE("MTT has one nonzero per triangle") {
    const Gadget g = make_matching_triangular_triangle();
    const auto a = triadjacency(g.config, g.tripartition, {});
    CHECK(a.nonzero_count() == 23);
    CHECK(a.side() == 13);
    CHECK(permanent3(a) == Polynomial::monomial(13));
  }
  SUBCASE("unequal classes pad to a cube with zero permanent") {
    const Gadget t = make_tunnel();
    const auto a = triadjacency(t.config, t.tripartition, {});
    CHECK(a.is_cubic());
    CHECK(a.side() == 6);
    CHECK(permanent3(a).is_zero());
  }
  SUBCASE("invalid tripartition or negative weight is refused") {
    const auto c = single_triangle();
    EdgeTripartition bad;
    bad.classes = {{"ab", 1}, {"bc", 1}, {"ac", 3}};
    CHECK_THROWS_AS(triadjacency(c, bad, {}), PreconditionError);
    EdgeTripartition ok;
    ok.classes = {{"ab", 1}, {"bc", 2}, {"ac", 3}};
    Weighting w;
    w.weights["t1"] = -1;
    CHECK_THROWS_AS(triadjacency(c, ok, w), PreconditionError);
  }
}

TEST_CASE("permanent of the triadjacency equals the matching polynomial") {
  std::mt19937_64 rng(99);
  int equal_classes = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Weighting w;
    const auto c = random_config(rng, w);
    const auto r = tripartite_reduction(c, w);
    const auto a = triadjacency(r.config, r.tripartition, r.weighting);
    ++equal_classes;
    CHECK(permanent3(a, 2) == perfect_matching_polynomial(r.config, r.weighting));
    CHECK(permanent3(a, 2) == brute_pm_polynomial(c, w));
  }
  CHECK(equal_classes == 30);

  // Direct tripartite inputs, including ones with no perfect matching.
  for (const auto& triples : std::vector<std::vector<std::string>>{
           {"abc", "def"}, {"abc", "acd"}, {"abc", "abd", "acd", "bcd"}, {"abc"}}) {
    const auto c = from_triples(triples);
    const auto p = find_edge_tripartition(c);
    if (!p) continue;
    const auto sizes = p->members();
    if (sizes[0].size() != sizes[1].size() || sizes[1].size() != sizes[2].size()) continue;
    CHECK(permanent3(triadjacency(c, *p, {})) == perfect_matching_polynomial(c, {}));
  }
}

TEST_CASE("vertex_adjacency") {
  const auto c = single_triangle();
  VertexTripartition p;
  p.classes = {{"a", 1}, {"b", 2}, {"c", 3}};
  const auto a = vertex_adjacency<Integer>(c, p, {{"t1", Integer(5)}});
  CHECK(a.dims() == std::array<std::size_t, 3>{1, 1, 1});
  CHECK(a.at(0, 0, 0) == 5);
  VertexTripartition bad;
  bad.classes = {{"a", 1}, {"b", 1}, {"c", 3}};
  CHECK_THROWS_AS(vertex_adjacency<Integer>(c, bad, {{"t1", Integer(5)}}), PreconditionError);
  CHECK_THROWS_AS(vertex_adjacency<Integer>(c, p, {}), PreconditionError);
  CHECK_THROWS_AS(vertex_adjacency<Integer>(without_vertex_data(c), p, {{"t1", Integer(5)}}),
                  PreconditionError);
  const std::array<std::vector<Id>, 3> order{{{"a"}, {"b"}, {"x"}}};
  CHECK_THROWS_AS(vertex_adjacency<Integer>(c, p, {{"t1", Integer(5)}}, order), PreconditionError);
}

TEST_CASE("projection graphs and apply_signing") {
  const auto d = diagonal({1, 2, 3});
  const auto pg = projection_graphs(d);
  const std::vector<BipartiteGraph::Edge> diag{{0, 0}, {1, 1}, {2, 2}};
  CHECK(pg.g1.edges == diag);
  CHECK(pg.g2.edges == diag);

  const auto ones = all_ones(2);
  const auto po = projection_graphs(ones);
  CHECK(po.g1.edges.size() == 4);
  CHECK(po.g2.edges.size() == 4);

  CHECK(apply_signing(ones, all_plus(po.g1), all_plus(po.g2)) == ones);
  EdgeSigning s1 = all_plus(po.g1);
  s1.signs[{0, 1}] = -1;
  const auto flipped = apply_signing(ones, s1, all_plus(po.g2));
  for (const auto& [idx, v] : flipped.entries())
    CHECK(v == (idx[0] == 0 && idx[1] == 1 ? -1 : 1));
  CHECK_THROWS_AS(apply_signing(ones, EdgeSigning{}, all_plus(po.g2)), PreconditionError);
}

TEST_CASE("find_pfaffian_signing") {
  SUBCASE("forest keeps all +1") {
    const BipartiteGraph path(3, 3, {{0, 0}, {0, 1}, {1, 1}, {2, 2}});
    const auto s = find_pfaffian_signing(path);
    REQUIRE(s);
    CHECK(*s == all_plus(path));
  }
  SUBCASE("4-cycle needs exactly one -1") {
    const BipartiteGraph square(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const auto s = find_pfaffian_signing(square);
    REQUIRE(s);
    int minus = 0;
    for (const auto& [e, v] : s->signs) minus += v < 0;
    CHECK(minus % 2 == 1);
    CHECK(determinant2(signed_biadjacency(square, *s)) == 2);
  }
  SUBCASE("zero permanent") {
    const BipartiteGraph g(2, 2, {{0, 0}, {1, 0}});
    const auto s = find_pfaffian_signing(g);
    REQUIRE(s);
    CHECK(*s == all_plus(g));
  }
  SUBCASE("K33 is not Pfaffian") {
    std::vector<BipartiteGraph::Edge> e;
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b) e.emplace_back(a, b);
    CHECK_FALSE(find_pfaffian_signing(BipartiteGraph(3, 3, e)));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(find_pfaffian_signing(BipartiteGraph(2, 3, {})), PreconditionError);
    std::vector<BipartiteGraph::Edge> e;
    for (std::uint32_t a = 0; a < 6; ++a)
      for (std::uint32_t b = 0; b < 6; ++b) e.emplace_back(a, b);
    CHECK_THROWS_AS(find_pfaffian_signing(BipartiteGraph(6, 6, e)), GuardExceeded);
  }
  SUBCASE("agrees with the exhaustive 2^E oracle") {
    std::mt19937_64 rng(3);
    int found = 0, absent = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = random_bipartite(rng, 2 + rng() % 2, 55 + static_cast<int>(rng() % 40));
      const auto s = find_pfaffian_signing(g);
      CHECK(s.has_value() == brute_has_pfaffian_signing(g));
      if (s) {
        ++found;
        CHECK(s->signs.size() == g.edges.size());
        CHECK(brute_permanent2(signed_biadjacency(g, *s), true) == permanent2(biadjacency(g)));
      } else {
        ++absent;
      }
    }
    CHECK(found > 0);
    CHECK(absent > 0);
  }
}

TEST_CASE("bipartite perfect matchings") {
  const BipartiteGraph square(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  const std::vector<std::vector<std::uint32_t>> expected{{0, 1}, {1, 0}};
  CHECK(enumerate_bipartite_perfect_matchings(square) == expected);
  CHECK(enumerate_bipartite_perfect_matchings(BipartiteGraph(2, 3, {{0, 0}})).empty());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_bipartite(rng, 1 + rng() % 5, 50);
    CHECK(Integer(enumerate_bipartite_perfect_matchings(g).size()) == permanent2(biadjacency(g)));
  }
}

TEST_CASE("kasteleyn_sign_via_k1") {
  const auto d = diagonal({2, 3, 4});
  const auto kd = kasteleyn_sign_via_k1(d);
  REQUIRE(kd);
  CHECK(kd->signed_tensor == d);
  CHECK(kd->determinant == 24);

  const auto k = kasteleyn_sign_via_k1(all_ones(2));
  REQUIRE(k);
  CHECK(k->permanent == 4);
  CHECK(k->determinant == 4);
  CHECK(determinant3_dense(k->signed_tensor) == 4);

  std::mt19937_64 rng(21);
  int certified = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = random_tensor<Integer>(rng, 1 + rng() % 3, 35, 1, 3);
    const auto r = kasteleyn_sign_via_k1(a);
    if (!r) continue;
    ++certified;
    CHECK(determinant3_dense(r->signed_tensor) == permanent3_dense(a));
  }
  CHECK(certified >= 20);
}

TEST_CASE("permanent2 and determinant2") {
  CHECK(permanent2(Matrix<Integer>::identity(4)) == 1);
  Matrix<Integer> ones(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
  CHECK(permanent2(ones) == 6);
  CHECK(determinant2(ones) == 0);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 5, trial % 2 ? 0 : -3, trial % 2 ? 1 : 3);
    CHECK(permanent2(m) == brute_permanent2(m));
    CHECK(determinant2(m) == brute_permanent2(m, true));
    CHECK(permutation_sum_by_subsets(m, false) == permanent2(m));
    CHECK(permutation_sum_by_subsets(m, true) == determinant2(m));
    Matrix<Rational> q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
    CHECK(determinant2(q) == Rational(determinant2(m)));
  }
  CHECK_THROWS_AS(permanent2(Matrix<Integer>(2, 3)), PreconditionError);
}

TEST_CASE("Binet-Cauchy") {
  SUBCASE("examples") {
    RectMatrixTriple<Integer> t{Matrix<Integer>::from_rows({{2}}), Matrix<Integer>::from_rows({{3}}),
                                Matrix<Integer>::from_rows({{5}})};
    CHECK(binet_cauchy_C(t).at(0, 0, 0) == 30);
    RectMatrixTriple<Integer> u{Matrix<Integer>::from_rows({{1, 1}}),
                                Matrix<Integer>::from_rows({{1, 1}}),
                                Matrix<Integer>::from_rows({{1, 1}})};
    CHECK(binet_cauchy_C(u).at(0, 0, 0) == 2);
    CHECK(binet_cauchy_rhs(u) == 2);
  }
  SUBCASE("square triple is a single subset") {
    std::mt19937_64 rng(6);
    const RectMatrixTriple<Integer> t{random_matrix(rng, 3, -3, 3), random_matrix(rng, 3, -3, 3),
                                      random_matrix(rng, 3, -3, 3)};
    CHECK(binet_cauchy_rhs(t) == permanent2(t.a1) * determinant2(t.a2) * determinant2(t.a3));
  }
  SUBCASE("equal columns contribute nothing") {
    RectMatrixTriple<Integer> t{Matrix<Integer>::from_rows({{1, 2, 3}, {4, 5, 6}}),
                                Matrix<Integer>::from_rows({{1, 1, 2}, {3, 3, 1}}),
                                Matrix<Integer>::from_rows({{1, 0, 2}, {0, 1, 1}})};
    const Integer full = binet_cauchy_rhs(t);
    Integer manual = 0;
    for (auto cols : std::vector<std::vector<std::size_t>>{{0, 2}, {1, 2}})
      manual += permanent2(t.a1.columns(cols)) * determinant2(t.a2.columns(cols)) *
                determinant2(t.a3.columns(cols));
    CHECK(full == manual);
  }
  SUBCASE("random triples against the C tensor and a direct sum") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 3, n = r + rng() % (6 - r);
      auto rect = [&] {
        Matrix<Integer> m(r, n);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<int>(rng() % 7) - 3;
        return m;
      };
      const RectMatrixTriple<Integer> t{rect(), rect(), rect()};
      const auto c = binet_cauchy_C(t);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k) {
            Integer sum = 0;
            for (std::size_t col = 0; col < n; ++col) sum += t.a1(i, col) * t.a2(j, col) * t.a3(k, col);
            CHECK(c.at(i, j, k) == sum);
          }
      CHECK(determinant3(c) == binet_cauchy_rhs(t));
      CHECK(determinant3_dense(c) == binet_cauchy_rhs(t));
    }
  }
  SUBCASE("guards and shapes") {
    RectMatrixTriple<Integer> bad{Matrix<Integer>(2, 1), Matrix<Integer>(2, 1), Matrix<Integer>(2, 1)};
    CHECK_THROWS_AS(bad.require_valid(), PreconditionError);
    RectMatrixTriple<Integer> big{Matrix<Integer>(10, 40), Matrix<Integer>(10, 40),
                                  Matrix<Integer>(10, 40)};
    CHECK_THROWS_AS(binet_cauchy_rhs(big), GuardExceeded);
  }
}

TEST_CASE("tensor JSON round trip") {
  std::mt19937_64 rng(1);
  const auto a = random_tensor<Integer>(rng, 3, 50, -9, 9);
  const auto back = tensor_from_json(tensor_to_json(a));
  REQUIRE(std::holds_alternative<Tensor3<Integer>>(back));
  CHECK(std::get<Tensor3<Integer>>(back) == a);

  Tensor3<Rational> q = Tensor3<Rational>::cube(2);
  q.set(0, 1, 1, Rational(1, 3));
  q.set(1, 0, 0, Rational(2));
  const auto qb = tensor_from_json(tensor_to_json(q));
  REQUIRE(std::holds_alternative<Tensor3<Rational>>(qb));
  CHECK(std::get<Tensor3<Rational>>(qb) == q);

  const Gadget g = make_s5();
  const auto p = triadjacency(g.config, g.tripartition, {});
  const auto pb = tensor_from_json(tensor_to_json(p));
  REQUIRE(std::holds_alternative<Tensor3<Polynomial>>(pb));
  CHECK(std::get<Tensor3<Polynomial>>(pb) == p);

  const auto big = parse_tensor(R"({"dims":[1,1,1],"entries":[[0,0,0,"123456789012345678901234567890"]]})");
  CHECK(std::get<Tensor3<Integer>>(big).at(0, 0, 0) == parse_integer("123456789012345678901234567890"));

  CHECK_THROWS_AS(parse_tensor(R"({"dims":[1,1],"entries":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_tensor(R"({"dims":[1,1,1],"entries":[[1,0,0,1]]})"), SchemaError);
  CHECK_THROWS_AS(parse_tensor(R"({"dims":[1,1,1],"entries":[],"x":1})"), SchemaError);
  CHECK_THROWS_AS(parse_tensor(R"({"dims":[1,1,1],"entries":[[0,0,0,1.5]]})"), SchemaError);
  CHECK_THROWS_AS(parse_tensor("{"), SchemaError);
}
