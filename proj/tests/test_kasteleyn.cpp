#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kas3/kasteleyn.hpp"
#include "kas3/tripartition.hpp"
#include "support.hpp"

using namespace kas3;
using namespace kas3::testing;

namespace {

Matrix<Integer> ones(std::size_t n) {
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
  return m;
}

// Swaps two labels of the second axis: every term changes sign.
Tensor3<Integer> swap_axis1(const Tensor3<Integer>& a, std::uint32_t x, std::uint32_t y) {
  Tensor3<Integer> out(a.dims()[0], a.dims()[1], a.dims()[2]);
  for (const auto& [idx, v] : a.entries()) {
    const std::uint32_t j = idx[1] == x ? y : idx[1] == y ? x : idx[1];
    out.set(idx[0], j, idx[2], v);
  }
  return out;
}

void check_construction(const Matrix<Integer>& m) {
  const auto tc = build_T(m);
  const std::size_t n = m.rows();
  const std::size_t edges = tc.skeleton.graph.edges.size();
  CHECK(tc.m() == 2 * n + edges);
  CHECK(tc.m() <= n * n + 2 * n);
  CHECK(tc.config().vertex_count() == 3 * tc.m());
  CHECK(tc.config().triangle_count() == 4 * edges);
  CHECK(tc.tensor.side() == tc.m());
  CHECK(is_vertex_tripartition(tc.config(), tc.skeleton.classes));
  for (const auto& cls : tc.skeleton.classes.members()) CHECK(cls.size() == tc.m());

  const Integer per = permanent2(m);
  CHECK(permanent3(tc.tensor) == per);
  CHECK(determinant3(tc.tensor) == per);
  const auto report = certify_trivial_signing(tc);
  CHECK(report.passed);
  CHECK_FALSE(report.witness);
  CHECK(strong_matching_bijection_check(tc).passed);
  CHECK(g1_structure_check(tc).passed);
}

}  // namespace

TEST_CASE("T(G) examples") {
  SUBCASE("1x1 matrix") {
    const auto tc = build_T(Matrix<Integer>::from_rows({{7}}));
    CHECK(tc.m() == 3);
    CHECK(permanent3(tc.tensor) == 7);
    CHECK(determinant3(tc.tensor) == 7);
    const auto r = certify_trivial_signing(tc);
    CHECK(r.passed);
    CHECK(r.contributing == 1);
  }
  SUBCASE("identity n=2") {
    const auto tc = build_T(Matrix<Integer>::identity(2));
    CHECK(tc.m() == 6);
    CHECK(permanent3(tc.tensor) == 1);
    CHECK(certify_trivial_signing(tc).passed);
  }
  SUBCASE("all-ones n=2") {
    const auto tc = build_T(ones(2));
    CHECK(tc.m() == 8);
    CHECK(permanent3(tc.tensor) == 2);
    CHECK(determinant3(tc.tensor) == 2);
    CHECK(certify_trivial_signing(tc).contributing == 2);
  }
  SUBCASE("all-ones n=3 and n=4") {
    check_construction(ones(3));
    check_construction(ones(4));
  }
  SUBCASE("zero matrix") {
    const auto tc = build_T(Matrix<Integer>(2, 2));
    CHECK(tc.m() == 4);
    CHECK(permanent3(tc.tensor) == 0);
    CHECK(certify_trivial_signing(tc).contributing == 0);
  }
  CHECK_THROWS_AS(build_T(Matrix<Integer>(2, 3)), PreconditionError);
}

TEST_CASE("naming and entry placement") {
  const auto m = Matrix<Integer>::from_rows({{2, 0}, {-3, 5}});
  const auto tc = build_T(m);
  const auto& c = tc.config();
  const auto& edges = tc.skeleton.graph.edges;
  REQUIRE(edges.size() == 3);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t e = k + 1;
    const auto a = edges[k].first + 1, b = edges[k].second + 1;
    for (const auto& t : {tnames::tri_ab(e), tnames::tri_w(e), tnames::tri_r(e), tnames::tri_c(e)})
      REQUIRE(c.triangle_index(t));
    auto vertices_of = [&](const std::string& t) {
      std::set<Id> out;
      for (Index v : *c.triangle_vertices(*c.triangle_index(t))) out.insert(c.vertices()[v]);
      return out;
    };
    CHECK(vertices_of(tnames::tri_ab(e)) ==
          std::set<Id>{tnames::v(1, a), tnames::v(2, b), tnames::w(0, e)});
    CHECK(vertices_of(tnames::tri_w(e)) ==
          std::set<Id>{tnames::w(0, e), tnames::w(1, e), tnames::w(2, e)});
    CHECK(vertices_of(tnames::tri_r(e)) ==
          std::set<Id>{tnames::w0(1, a), tnames::v_prime(2, a), tnames::w(1, e)});
    CHECK(vertices_of(tnames::tri_c(e)) ==
          std::set<Id>{tnames::w0(2, b), tnames::v_prime(1, b), tnames::w(2, e)});
    CHECK(tc.entry_values.at(tnames::tri_ab(e)) == m(edges[k].first, edges[k].second));
  }

  // Each triangle lands at the axis positions of its vertices.
  std::map<Id, std::uint32_t> position;
  for (const auto& list : tc.skeleton.order)
    for (std::uint32_t i = 0; i < list.size(); ++i) position[list[i]] = i;
  for (const auto& t : c.triangles()) {
    std::array<std::uint32_t, 3> at{};
    for (Index v : *c.triangle_vertices(*c.triangle_index(t.id))) {
      const Id& name = c.vertices()[v];
      at[tc.skeleton.classes.of(name) - 1] = position.at(name);
    }
    CHECK(tc.tensor.at(at[0], at[1], at[2]) == tc.entry_values.at(t.id));
  }
  CHECK(tc.tensor.nonzero_count() == c.triangle_count());
  CHECK(permanent3(tc.tensor) == 10);
}

TEST_CASE("random matrices: per2 = per3 = det3 with a trivial signing") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    Matrix<Integer> m = trial % 2 ? random_matrix(rng, n, 0, 1) : random_matrix(rng, n, -3, 3);
    check_construction(m);
  }
}

TEST_CASE("threads do not change the results") {
  const auto tc = build_T(ones(3));
  CHECK(permanent3(tc.tensor, 4) == permanent3(tc.tensor, 1));
  CHECK(determinant3(tc.tensor, 4) == 6);
  CHECK(strong_matching_bijection_check(tc, 4).passed);
}

TEST_CASE("a corrupted tensor fails certification with a witness") {
  const auto tc = build_T(ones(2));
  const auto bad = swap_axis1(tc.tensor, 0, 1);
  const auto r = certify_trivial_signing(bad);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(permutation_sign(r.witness->first) * permutation_sign(r.witness->second) == -1);
  CHECK(determinant3(bad) == -permanent3(bad));

  // Re-wiring a single triangle onto another position.
  int failures = 0;
  for (const auto& [idx, v] : tc.tensor.entries()) {
    for (std::uint32_t j = 0; j < tc.m(); ++j) {
      if (j == idx[1] || tc.tensor.at(idx[0], j, idx[2]) != 0) continue;
      Tensor3<Integer> moved = tc.tensor;
      moved.set(idx[0], idx[1], idx[2], 0);
      moved.set(idx[0], j, idx[2], v);
      const auto report = certify_trivial_signing(moved);
      if (!report.passed) {
        ++failures;
        CHECK(report.witness);
      }
    }
  }
  CHECK(failures > 0);
  CHECK_THROWS_AS(certify_trivial_signing(Tensor3<Integer>::cube(65)), GuardExceeded);
}

TEST_CASE("strong matching bijection examples") {
  SUBCASE("single edge") {
    const auto r = strong_matching_bijection_check(build_T(Matrix<Integer>::from_rows({{1}})));
    CHECK(r.passed);
    CHECK(r.detail == "1 perfect matching(s) of G, 1 perfect strong matching(s) of T(G)");
  }
  SUBCASE("4-cycle") {
    const auto r = strong_matching_bijection_check(build_T(ones(2)));
    CHECK(r.passed);
    CHECK(r.detail == "2 perfect matching(s) of G, 2 perfect strong matching(s) of T(G)");
  }
  SUBCASE("isolated vertex") {
    const auto r = strong_matching_bijection_check(build_T(Matrix<Integer>::from_rows({{1, 0}, {0, 0}})));
    CHECK(r.passed);
    CHECK(r.detail == "0 perfect matching(s) of G, 0 perfect strong matching(s) of T(G)");
  }
  SUBCASE("image of the identity matching") {
    const auto tc = build_T(Matrix<Integer>::identity(2));
    const Matching image = strong_matching_image(tc.skeleton, {0, 1});
    CHECK(image.size() == 2 * 3);
    CHECK(image.contains(tnames::tri_ab(1)));
    CHECK(image.contains(tnames::tri_r(2)));
    CHECK_FALSE(image.contains(tnames::tri_w(1)));
  }
}

TEST_CASE("G1 structure") {
  const auto tc = build_T(ones(2));
  CHECK(g1_structure_check(tc).passed);
  auto g1 = projection_graphs(tc.tensor).g1;
  auto edges = g1.edges;
  for (std::uint32_t a = 0; a < g1.left; ++a)
    for (std::uint32_t b = 0; b < g1.right; ++b)
      if (!g1.has_edge(a, b)) {
        edges.emplace_back(a, b);
        CHECK_FALSE(g1_structure_check(tc.skeleton, BipartiteGraph(g1.left, g1.right, edges)).passed);
        edges.pop_back();
        a = g1.left;
        break;
      }
  edges.erase(edges.begin());
  CHECK_FALSE(g1_structure_check(tc.skeleton, BipartiteGraph(g1.left, g1.right, edges)).passed);
}

TEST_CASE("the projection graphs of T(G) are certified by K1 with all-plus signs") {
  const auto tc = build_T(ones(2));
  const auto k = kasteleyn_sign_via_k1(tc.tensor);
  REQUIRE(k);
  const auto graphs = projection_graphs(tc.tensor);
  CHECK(k->s1 == all_plus(graphs.g1));
  CHECK(k->s2 == all_plus(graphs.g2));
  CHECK(k->determinant == 2);
}
