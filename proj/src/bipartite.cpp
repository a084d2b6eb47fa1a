#include "kas3/bipartite.hpp"

#include <algorithm>
#include <numeric>

namespace kas3 {

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count,
                               std::vector<Edge> edge_list)
    : left(left_count), right(right_count), edges(std::move(edge_list)) {
  for (const auto& [a, b] : edges)
    if (a >= left || b >= right) throw PreconditionError("bipartite edge out of range");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool BipartiteGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
}

Matrix<Integer> biadjacency(const BipartiteGraph& g) {
  Matrix<Integer> m(g.left, g.right);
  for (const auto& [a, b] : g.edges) m(a, b) = 1;
  return m;
}

namespace {

void extend(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t row,
            std::vector<char>& used, std::vector<std::uint32_t>& partial,
            std::vector<std::vector<std::uint32_t>>& out) {
  if (row == adj.size()) {
    out.push_back(partial);
    return;
  }
  for (std::uint32_t b : adj[row]) {
    if (used[b]) continue;
    used[b] = 1;
    partial.push_back(b);
    extend(adj, row + 1, used, partial, out);
    partial.pop_back();
    used[b] = 0;
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_bipartite_perfect_matchings(
    const BipartiteGraph& g) {
  std::vector<std::vector<std::uint32_t>> out;
  if (g.left != g.right) return out;
  std::vector<std::vector<std::uint32_t>> adj(g.left);
  for (const auto& [a, b] : g.edges) adj[a].push_back(b);
  std::vector<char> used(g.right, 0);
  std::vector<std::uint32_t> partial;
  extend(adj, 0, used, partial, out);
  return out;
}

int EdgeSigning::of(const BipartiteGraph::Edge& e) const {
  auto it = signs.find(e);
  if (it == signs.end())
    throw PreconditionError("signing has no sign for edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ")");
  return it->second;
}

EdgeSigning all_plus(const BipartiteGraph& g) {
  EdgeSigning s;
  for (const auto& e : g.edges) s.signs[e] = 1;
  return s;
}

Matrix<Integer> signed_biadjacency(const BipartiteGraph& g, const EdgeSigning& s) {
  Matrix<Integer> m(g.left, g.right);
  for (const auto& e : g.edges) m(e.first, e.second) = s.of(e);
  return m;
}

std::optional<EdgeSigning> find_pfaffian_signing(const BipartiteGraph& g) {
  if (g.left != g.right) throw PreconditionError("find_pfaffian_signing needs equal sides");
  const std::size_t n = g.left;
  const Matrix<Integer> plain = biadjacency(g);
  const Integer per = permanent2(plain);
  EdgeSigning signing = all_plus(g);
  if (per.is_zero()) return signing;

  // Edges in some perfect matching: the minor without their row and column
  // has a nonzero permanent.
  std::vector<BipartiteGraph::Edge> relevant;
  for (const auto& [a, b] : g.edges) {
    Matrix<Integer> minor(n - 1, n - 1);
    for (std::size_t i = 0, r = 0; i < n; ++i) {
      if (i == a) continue;
      for (std::size_t j = 0, c = 0; j < n; ++j) {
        if (j == b) continue;
        minor(r, c++) = plain(i, j);
      }
      ++r;
    }
    if (!permanent2(minor).is_zero()) relevant.emplace_back(a, b);
  }

  // Spanning forest on left vertices [0,n) and right vertices [n,2n).
  std::vector<std::size_t> parent(2 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<BipartiteGraph::Edge> free_edges;
  for (const auto& [a, b] : relevant) {
    const std::size_t ra = find(a), rb = find(n + b);
    if (ra == rb)
      free_edges.push_back({a, b});
    else
      parent[ra] = rb;
  }
  if (free_edges.size() > kMaxSigningSearchBits)
    throw GuardExceeded("find_pfaffian_signing: " + std::to_string(free_edges.size()) +
                        " free cycle bits exceed " + std::to_string(kMaxSigningSearchBits));

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_edges.size()); ++mask) {
    for (std::size_t i = 0; i < free_edges.size(); ++i)
      signing.signs[free_edges[i]] = (mask >> i) & 1 ? -1 : 1;
    const Integer det = determinant2(signed_biadjacency(g, signing));
    if (det == per) return signing;
    if (det == -per) {
      for (auto& [e, s] : signing.signs)
        if (e.first == 0) s = -s;
      return signing;
    }
  }
  return std::nullopt;
}

}  // namespace kas3
