#pragma once

#include "kas3/bipartite.hpp"
#include "kas3/config.hpp"
#include "kas3/matching.hpp"
#include "kas3/matrix.hpp"
#include "kas3/tensor3.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kas3 {

/// Vertex and triangle names of T(G). Indices j are 1-based rows/columns,
/// edges e are 1-based positions in the row-major edge list of G.
namespace tnames {
std::string v(int side, std::size_t j);        // v(1,j) in V1, v(2,j) in V2
std::string v_prime(int side, std::size_t j);  // v'(1,j), v'(2,j)
std::string w(int cls, std::size_t e);         // w(0,e), w(1,e), w(2,e)
std::string w0(int side, std::size_t j);       // w(0,1,j), w(0,2,j)
std::string edge(std::size_t e);               // e<k>
// The four triangles contributed by edge e = ab of G.
std::string tri_ab(std::size_t e);  // (v(1,a), v(2,b), w(0,e))
std::string tri_w(std::size_t e);   // (w(0,e), w(1,e), w(2,e))
std::string tri_r(std::size_t e);   // (w(0,1,a), v'(2,a), w(1,e))
std::string tri_c(std::size_t e);   // (w(0,2,b), v'(1,b), w(2,e))
}  // namespace tnames

/// The value-independent part of T(G).
struct TSkeleton {
  BipartiteGraph graph;
  TriangularConfiguration config;
  VertexTripartition classes;  // W0 -> 1, W1 -> 2, W2 -> 3
  /// Class orders used for the tensor axes. They make sign(s1) = sign(s2)
  /// for every term, so all-plus signs are trivially Kasteleyn.
  std::array<std::vector<Id>, 3> order;
  std::size_t m = 0;  // 2n + |E|
};

TSkeleton build_T_skeleton(const BipartiteGraph& g);

template <class T>
struct TConstruction {
  Matrix<T> source;
  TSkeleton skeleton;
  std::map<Id, T> entry_values;  // M_ab on tri_ab(e), 1 elsewhere
  Tensor3<T> tensor;

  const TriangularConfiguration& config() const { return skeleton.config; }
  std::size_t m() const { return skeleton.m; }
};

/// T(G) for the support G of a square matrix, with its vertex-adjacency
/// 3-matrix. Throws PreconditionError for non-square input.
template <class T>
TConstruction<T> build_T(const Matrix<T>& source) {
  if (!source.is_square()) throw PreconditionError("build_T needs a square matrix");
  TConstruction<T> tc{source, build_T_skeleton(support_graph(source)), {}, {}};
  const auto& edges = tc.skeleton.graph.edges;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t e = k + 1;
    tc.entry_values[tnames::tri_ab(e)] = source(edges[k].first, edges[k].second);
    tc.entry_values[tnames::tri_w(e)] = T(1);
    tc.entry_values[tnames::tri_r(e)] = T(1);
    tc.entry_values[tnames::tri_c(e)] = T(1);
  }
  tc.tensor = vertex_adjacency(tc.skeleton.config, tc.skeleton.classes, tc.entry_values,
                               std::optional(tc.skeleton.order));
  return tc;
}

struct SigningReport {
  bool passed = false;
  std::size_t contributing = 0;
  /// First (s1, s2) pair with sign(s1) sign(s2) = -1, in search order.
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> witness;
};

inline constexpr std::size_t kMaxCertifiedSide = 64;

/// Checks that every nonzero term of the tensor has sign(s1) sign(s2) = +1.
template <class T>
SigningReport certify_trivial_signing(const Tensor3<T>& a) {
  const Tensor3<T> cube = a.padded();
  if (cube.side() > kMaxCertifiedSide)
    throw GuardExceeded("certify_trivial_signing: side " + std::to_string(cube.side()) +
                        " exceeds " + std::to_string(kMaxCertifiedSide));
  SigningReport report{true, 0, std::nullopt};
  TermSearch<T>(cube).visit_all([&](auto s1, auto s2, const T&) {
    ++report.contributing;
    if (permutation_sign(s1) * permutation_sign(s2) < 0 && !report.witness) {
      report.passed = false;
      report.witness.emplace(std::vector<std::uint32_t>(s1.begin(), s1.end()),
                             std::vector<std::uint32_t>(s2.begin(), s2.end()));
    }
  });
  return report;
}

template <class T>
SigningReport certify_trivial_signing(const TConstruction<T>& tc) {
  return certify_trivial_signing(tc.tensor);
}

struct CheckReport {
  bool passed = false;
  std::string detail;
};

/// Image of a perfect matching of G (row -> column) among the triangles of
/// T(G): the ab-triangles of its edges, the w-triangles of the other edges,
/// and the r/c-triangles of its edges.
Matching strong_matching_image(const TSkeleton& skeleton,
                               const std::vector<std::uint32_t>& matching);

/// Enumerates both sides and checks that the image map is a bijection onto
/// the perfect strong matchings of T(G) and that entry products agree with
/// prod_a M(a, P(a)).
template <class T>
CheckReport strong_matching_bijection_check(const TConstruction<T>& tc, unsigned threads = 1) {
  const auto graph_matchings = enumerate_bipartite_perfect_matchings(tc.skeleton.graph);
  const auto strong = enumerate_perfect_strong_matchings(tc.config(), threads);
  std::set<Matching> images;
  bool products_agree = true;
  for (const auto& p : graph_matchings) {
    const Matching image = strong_matching_image(tc.skeleton, p);
    images.insert(image);
    T lhs(1), rhs(1);
    for (const auto& t : image.triangles) lhs *= tc.entry_values.at(t);
    for (std::size_t a = 0; a < p.size(); ++a) rhs *= tc.source(a, p[a]);
    products_agree = products_agree && lhs == rhs;
  }
  const std::set<Matching> strong_set(strong.begin(), strong.end());
  CheckReport r;
  r.passed = images.size() == graph_matchings.size() && images == strong_set && products_agree;
  r.detail = std::to_string(graph_matchings.size()) + " perfect matching(s) of G, " +
             std::to_string(strong.size()) + " perfect strong matching(s) of T(G)" +
             (images == strong_set ? "" : ", image differs") +
             (products_agree ? "" : ", entry products differ");
  return r;
}

/// Components of G1 of the tensor are single edges {w(0,2,j), v'(1,j)}, or
/// unions of deg(v(1,j)) disjoint length-3 paths between v(1,j) and w(0,1,j).
CheckReport g1_structure_check(const TSkeleton& skeleton, const BipartiteGraph& g1);

template <class T>
CheckReport g1_structure_check(const TConstruction<T>& tc) {
  return g1_structure_check(tc.skeleton, projection_graphs(tc.tensor).g1);
}

}  // namespace kas3
