#pragma once

// Builders and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's search engines.

#include "kas3/config.hpp"
#include "kas3/matrix.hpp"
#include "kas3/polynomial.hpp"
#include "kas3/tensor3.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace kas3::testing {

inline EdgeSpec edge(const std::string& a, const std::string& b) {
  return {a < b ? a + b : b + a, std::make_pair(a, b)};
}

inline std::string eid(const std::string& a, const std::string& b) { return a < b ? a + b : b + a; }

/// Configuration from vertex triples; vertices are single-letter ids.
inline TriangularConfiguration from_triples(const std::vector<std::string>& triples,
                                            const std::vector<std::string>& extra_edges = {}) {
  std::set<std::string> vertices;
  std::map<std::string, EdgeSpec> edges;
  std::vector<TriangleSpec> triangles;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const std::string a(1, triples[i][0]), b(1, triples[i][1]), c(1, triples[i][2]);
    vertices.insert({a, b, c});
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, c}, std::pair{a, c}}) edges.emplace(eid(x, y), edge(x, y));
    triangles.push_back({"t" + std::to_string(i + 1), {eid(a, b), eid(b, c), eid(a, c)}});
  }
  for (const auto& e : extra_edges) {
    const std::string a(1, e[0]), b(1, e[1]);
    vertices.insert({a, b});
    edges.emplace(eid(a, b), edge(a, b));
  }
  std::vector<EdgeSpec> edge_list;
  for (auto& [id, spec] : edges) edge_list.push_back(spec);
  return TriangularConfiguration({vertices.begin(), vertices.end()}, edge_list, triangles);
}

inline TriangularConfiguration single_triangle() { return from_triples({"abc"}); }

inline TriangularConfiguration tetrahedron() { return from_triples({"abc", "abd", "acd", "bcd"}); }

/// Every set of pairwise edge-disjoint triangles, as sorted id lists, found by
/// include/exclude recursion over triangle indices with 64-bit edge masks.
inline std::vector<std::vector<std::string>> brute_matchings(const TriangularConfiguration& c) {
  std::vector<std::uint64_t> mask(c.triangle_count(), 0);
  for (Index t = 0; t < c.triangle_count(); ++t)
    for (Index e : c.triangle_edges(t)) mask[t] |= std::uint64_t{1} << e;
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> chosen;
  auto rec = [&](auto&& self, std::size_t t, std::uint64_t used) -> void {
    if (t == mask.size()) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
      return;
    }
    self(self, t + 1, used);
    if (!(used & mask[t])) {
      chosen.push_back(c.triangles()[t].id);
      self(self, t + 1, used | mask[t]);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::string> brute_defect(const TriangularConfiguration& c,
                                          const std::vector<std::string>& m) {
  std::set<std::string> d;
  for (const auto& e : c.edges()) d.insert(e.id);
  for (const auto& t : m)
    for (const auto& e : c.triangles()[*c.triangle_index(t)].edges) d.erase(e);
  return d;
}

inline std::vector<std::vector<std::string>> brute_within(const TriangularConfiguration& c,
                                                          const std::set<std::string>& allowed) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : brute_matchings(c)) {
    const auto d = brute_defect(c, m);
    if (std::includes(allowed.begin(), allowed.end(), d.begin(), d.end())) out.push_back(m);
  }
  return out;
}

inline Polynomial brute_pm_polynomial(const TriangularConfiguration& c, const Weighting& w) {
  Polynomial p;
  for (const auto& m : brute_within(c, {})) {
    std::int64_t total = 0;
    for (const auto& t : m) total += w.of(t);
    p.add_term(total, 1);
  }
  return p;
}

/// Random configuration on up to 7 vertices with 1..6 distinct triangles.
/// Half of the draws plant vertex-disjoint triangles first, so perfect
/// matchings are common.
inline TriangularConfiguration random_config(std::mt19937_64& rng, Weighting& w) {
  const std::string letters = "abcdefghi";
  std::set<std::string> triples;
  const int count = 1 + static_cast<int>(rng() % 6);
  if (rng() % 2) {
    const int planted = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < planted && static_cast<int>(triples.size()) < count; ++i)
      triples.insert(letters.substr(3 * i, 3));
  }
  const int pool = 3 + static_cast<int>(rng() % 5);
  for (int guard = 0; static_cast<int>(triples.size()) < count && guard < 100; ++guard) {
    std::string t;
    while (t.size() < 3) {
      const char v = letters[rng() % pool];
      if (t.find(v) == std::string::npos) t += v;
    }
    std::sort(t.begin(), t.end());
    triples.insert(t);
  }
  std::vector<std::string> list(triples.begin(), triples.end());
  std::shuffle(list.begin(), list.end(), rng);
  auto c = from_triples(list);
  w = Weighting{};
  for (const auto& t : c.triangles()) w.weights[t.id] = static_cast<std::int64_t>(rng() % 6);
  return c;
}

/// Sum over all n! permutations.
template <class T>
T brute_permanent2(const Matrix<T>& m, bool with_sign = false) {
  std::vector<std::size_t> p(m.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  T total(0);
  do {
    T prod(1);
    for (std::size_t i = 0; i < p.size(); ++i) prod *= m(i, p[i]);
    std::size_t inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    if (with_sign && inv % 2)
      total -= prod;
    else
      total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class T>
Tensor3<T> random_tensor(std::mt19937_64& rng, std::size_t n, int density_percent, int lo, int hi) {
  Tensor3<T> a = Tensor3<T>::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (static_cast<int>(rng() % 100) < density_percent)
          a.set(i, j, k, T(lo + static_cast<int>(rng() % (hi - lo + 1))));
  return a;
}

inline Matrix<Integer> random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lo + static_cast<int>(rng() % (hi - lo + 1));
  return m;
}

}  // namespace kas3::testing
