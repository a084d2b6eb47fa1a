#pragma once

#include "kas3/matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kas3 {

/// Bipartite graph on left vertices [0, left) and right vertices [0, right).
/// Edges are kept sorted and unique.
struct BipartiteGraph {
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<Edge> edges;

  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left, std::size_t right, std::vector<Edge> edges);

  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Support graph of the nonzero entries of `m`, rows on the left.
template <class T>
BipartiteGraph support_graph(const Matrix<T>& m) {
  std::vector<BipartiteGraph::Edge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) edges.emplace_back(i, j);
  return BipartiteGraph(m.rows(), m.cols(), std::move(edges));
}

/// 0/1 biadjacency matrix.
Matrix<Integer> biadjacency(const BipartiteGraph& g);

/// Perfect matchings as maps left -> right, in lexicographic order. Empty
/// when the sides differ in size.
std::vector<std::vector<std::uint32_t>> enumerate_bipartite_perfect_matchings(
    const BipartiteGraph& g);

/// Edge -> +1/-1, total over the graph it was made for.
struct EdgeSigning {
  std::map<BipartiteGraph::Edge, int> signs;

  int of(const BipartiteGraph::Edge& e) const;
  friend bool operator==(const EdgeSigning&, const EdgeSigning&) = default;
};

EdgeSigning all_plus(const BipartiteGraph& g);

/// Signed biadjacency matrix: s(e) at each edge, 0 elsewhere.
Matrix<Integer> signed_biadjacency(const BipartiteGraph& g, const EdgeSigning& s);

inline constexpr std::size_t kMaxSigningSearchBits = 20;

/// A signing whose signed biadjacency has determinant equal to the permanent
/// of the plain biadjacency, or nullopt when none exists.
///
/// Edges lying in no perfect matching keep +1. Among the others, a spanning
/// forest is fixed to +1 (vertex switching makes this lossless) and the
/// remaining cycle-space bits are searched exhaustively in increasing mask
/// order; a result with determinant -per is corrected by negating the edges
/// of the first row. Throws GuardExceeded when more than 20 bits remain or
/// the side exceeds the Ryser limit; PreconditionError when the sides differ.
std::optional<EdgeSigning> find_pfaffian_signing(const BipartiteGraph& g);

}  // namespace kas3
