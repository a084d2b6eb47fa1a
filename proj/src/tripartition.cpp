#include "kas3/tripartition.hpp"

#include "kas3/error.hpp"

#include <bit>
#include <cstdint>

namespace kas3 {

namespace {

// Rainbow 3-colouring of a 3-uniform hypergraph. Domains are bitmasks over
// {1,2,3} encoded as bits 0..2.
class RainbowSolver {
 public:
  RainbowSolver(std::size_t vars, std::vector<std::array<Index, 3>> triples)
      : triples_(std::move(triples)), incident_(vars) {
    for (Index t = 0; t < triples_.size(); ++t)
      for (Index v : triples_[t]) incident_[v].push_back(t);
  }

  std::optional<std::vector<int>> solve(const std::vector<std::uint8_t>& initial) {
    std::vector<std::uint8_t> dom = initial;
    for (Index v = 0; v < dom.size(); ++v)
      if (std::popcount(dom[v]) == 1 && !propagate(dom, v)) return std::nullopt;
    if (!search(dom)) return std::nullopt;
    std::vector<int> out(dom.size());
    for (Index v = 0; v < dom.size(); ++v) out[v] = std::countr_zero(dom[v]) + 1;
    return out;
  }

 private:
  // Removes the colour of fixed variable `v` from its triangle partners.
  bool propagate(std::vector<std::uint8_t>& dom, Index v) {
    std::vector<Index> queue{v};
    while (!queue.empty()) {
      const Index u = queue.back();
      queue.pop_back();
      const std::uint8_t c = dom[u];
      for (Index t : incident_[u]) {
        for (Index w : triples_[t]) {
          if (w == u) continue;
          if (!(dom[w] & c)) continue;
          dom[w] &= static_cast<std::uint8_t>(~c);
          if (dom[w] == 0) return false;
          if (std::popcount(dom[w]) == 1) queue.push_back(w);
        }
      }
    }
    return true;
  }

  bool search(std::vector<std::uint8_t>& dom) {
    Index best = static_cast<Index>(dom.size());
    int best_size = 4;
    for (Index v = 0; v < dom.size(); ++v) {
      const int s = std::popcount(dom[v]);
      if (s > 1 && s < best_size) {
        best = v;
        best_size = s;
        if (s == 2) break;
      }
    }
    if (best == dom.size()) return true;
    for (int c = 0; c < 3; ++c) {
      const std::uint8_t bit = static_cast<std::uint8_t>(1u << c);
      if (!(dom[best] & bit)) continue;
      std::vector<std::uint8_t> next = dom;
      next[best] = bit;
      if (propagate(next, best) && search(next)) {
        dom = std::move(next);
        return true;
      }
    }
    return false;
  }

  std::vector<std::array<Index, 3>> triples_;
  std::vector<std::vector<Index>> incident_;
};

std::vector<std::uint8_t> initial_domains(std::size_t count,
                                          const std::map<Id, int>& pins,
                                          const auto& index_of) {
  std::vector<std::uint8_t> dom(count, 0b111);
  for (const auto& [id, c] : pins) {
    if (c < 1 || c > 3)
      throw PreconditionError("pin for '" + id + "' must be 1, 2 or 3");
    auto idx = index_of(id);
    if (!idx) throw PreconditionError("pin references unknown id '" + id + "'");
    dom[*idx] = static_cast<std::uint8_t>(1u << (c - 1));
  }
  return dom;
}

}  // namespace

std::optional<EdgeTripartition> find_edge_tripartition(const TriangularConfiguration& config,
                                                       const std::map<Id, int>& pins) {
  require_valid(config);
  std::vector<std::array<Index, 3>> triples;
  triples.reserve(config.triangle_count());
  for (Index t = 0; t < config.triangle_count(); ++t) triples.push_back(config.triangle_edges(t));
  auto dom = initial_domains(config.edge_count(), pins,
                             [&](const Id& id) { return config.edge_index(id); });
  auto solved = RainbowSolver(config.edge_count(), std::move(triples)).solve(dom);
  if (!solved) return std::nullopt;
  EdgeTripartition out;
  for (Index e = 0; e < config.edge_count(); ++e) out.classes[config.edges()[e].id] = (*solved)[e];
  return out;
}

std::optional<VertexTripartition> find_vertex_tripartition(const TriangularConfiguration& config,
                                                           const std::map<Id, int>& pins) {
  require_valid(config);
  if (!config.has_vertex_data() && config.triangle_count() > 0)
    throw PreconditionError("vertex tripartition needs vertex data on every edge");
  std::vector<std::array<Index, 3>> triples;
  triples.reserve(config.triangle_count());
  for (Index t = 0; t < config.triangle_count(); ++t) triples.push_back(*config.triangle_vertices(t));
  auto dom = initial_domains(config.vertex_count(), pins,
                             [&](const Id& id) { return config.vertex_index(id); });
  auto solved = RainbowSolver(config.vertex_count(), std::move(triples)).solve(dom);
  if (!solved) return std::nullopt;
  VertexTripartition out;
  for (Index v = 0; v < config.vertex_count(); ++v)
    out.classes[config.vertices()[v]] = (*solved)[v];
  return out;
}

}  // namespace kas3
