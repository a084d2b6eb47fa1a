#include "kas3/compose.hpp"

#include "kas3/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kas3 {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TriangularConfiguration compose(const std::vector<ComposePart>& parts,
                                const std::vector<EdgeIdentification>& identifications) {
  // Global numbering: part-major, then the part's canonical index order, so
  // the smallest node of a class is also its naming representative.
  std::vector<std::size_t> edge_base(parts.size() + 1, 0), vertex_base(parts.size() + 1, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    edge_base[p + 1] = edge_base[p] + parts[p].config->edge_count();
    vertex_base[p + 1] = vertex_base[p] + parts[p].config->vertex_count();
  }
  const std::size_t edge_total = edge_base.back();
  const std::size_t vertex_total = vertex_base.back();

  auto edge_node = [&](const EdgeRef& ref) -> std::size_t {
    if (ref.part >= parts.size())
      throw PreconditionError("identification references part " + std::to_string(ref.part));
    auto idx = parts[ref.part].config->edge_index(ref.edge);
    if (!idx)
      throw PreconditionError("identification references unknown edge '" + ref.edge +
                              "' of part " + std::to_string(ref.part));
    return edge_base[ref.part] + *idx;
  };

  UnionFind edges(edge_total);
  for (const auto& id : identifications) edges.unite(edge_node(id.first), edge_node(id.second));

  std::vector<std::size_t> class_size(edge_total, 0);
  for (std::size_t n = 0; n < edge_total; ++n) ++class_size[edges.find(n)];

  // Vertices shared by two identified edges inside one part are identified
  // with the vertices shared by the partner edges in every other part.
  UnionFind vertices(vertex_total);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> corners;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& cfg = *parts[p].config;
    std::vector<std::vector<Index>> incident(cfg.vertex_count());
    for (Index e = 0; e < cfg.edge_count(); ++e) {
      if (class_size[edges.find(edge_base[p] + e)] < 2) continue;
      if (auto vs = cfg.edge_vertices(e)) {
        incident[vs->first].push_back(e);
        incident[vs->second].push_back(e);
      }
    }
    for (Index v = 0; v < cfg.vertex_count(); ++v) {
      const auto& inc = incident[v];
      for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          std::size_t a = edges.find(edge_base[p] + inc[i]);
          std::size_t b = edges.find(edge_base[p] + inc[j]);
          if (a == b) continue;
          if (a > b) std::swap(a, b);
          corners[{a, b}].push_back(vertex_base[p] + v);
        }
    }
  }
  for (const auto& [key, vs] : corners)
    for (std::size_t i = 1; i < vs.size(); ++i) vertices.unite(vs[0], vs[i]);

  auto ends_of = [&](std::size_t node) -> std::optional<std::pair<std::size_t, std::size_t>> {
    const std::size_t p =
        std::upper_bound(edge_base.begin(), edge_base.end(), node) - edge_base.begin() - 1;
    auto vs = parts[p].config->edge_vertices(static_cast<Index>(node - edge_base[p]));
    if (!vs) return std::nullopt;
    return std::make_pair(vertex_base[p] + vs->first, vertex_base[p] + vs->second);
  };

  // Align the endpoints of every identified edge with its class representative.
  std::vector<std::vector<std::size_t>> members(edge_total);
  for (std::size_t n = 0; n < edge_total; ++n) members[edges.find(n)].push_back(n);
  for (std::size_t root = 0; root < edge_total; ++root) {
    const auto& ms = members[root];
    if (ms.size() < 2) continue;
    std::optional<std::pair<std::size_t, std::size_t>> ref;
    for (std::size_t m : ms) {
      auto e = ends_of(m);
      if (!e) continue;
      if (!ref) {
        ref = e;
        continue;
      }
      const bool straight = vertices.find(e->first) == vertices.find(ref->first) ||
                            vertices.find(e->second) == vertices.find(ref->second);
      const bool crossed = vertices.find(e->first) == vertices.find(ref->second) ||
                           vertices.find(e->second) == vertices.find(ref->first);
      if (crossed && !straight) {
        vertices.unite(e->first, ref->second);
        vertices.unite(e->second, ref->first);
      } else {
        vertices.unite(e->first, ref->first);
        vertices.unite(e->second, ref->second);
      }
    }
    if (!ref) continue;
    const std::set<std::size_t> want{vertices.find(ref->first), vertices.find(ref->second)};
    for (std::size_t m : ms) {
      auto e = ends_of(m);
      if (!e) continue;
      const std::set<std::size_t> got{vertices.find(e->first), vertices.find(e->second)};
      if (got != want || want.size() != 2)
        throw PreconditionError("inconsistent vertex unification while identifying edges");
    }
  }

  // Names.
  std::vector<Id> vertex_name(vertex_total), edge_name(edge_total);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& cfg = *parts[p].config;
    for (Index v = 0; v < cfg.vertex_count(); ++v)
      vertex_name[vertex_base[p] + v] = parts[p].prefix + cfg.vertices()[v];
    for (Index e = 0; e < cfg.edge_count(); ++e)
      edge_name[edge_base[p] + e] = parts[p].prefix + cfg.edges()[e].id;
  }

  std::vector<Id> out_vertices;
  for (std::size_t v = 0; v < vertex_total; ++v)
    if (vertices.find(v) == v) out_vertices.push_back(vertex_name[v]);

  std::vector<EdgeSpec> out_edges;
  for (std::size_t root = 0; root < edge_total; ++root) {
    if (members[root].empty()) continue;
    EdgeSpec spec{edge_name[root], std::nullopt};
    for (std::size_t m : members[root]) {
      if (auto e = ends_of(m)) {
        spec.ends = std::make_pair(vertex_name[vertices.find(e->first)],
                                   vertex_name[vertices.find(e->second)]);
        break;
      }
    }
    out_edges.push_back(std::move(spec));
  }

  std::vector<TriangleSpec> out_triangles;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& cfg = *parts[p].config;
    for (Index t = 0; t < cfg.triangle_count(); ++t) {
      TriangleSpec spec{parts[p].prefix + cfg.triangles()[t].id, {}};
      for (int k = 0; k < 3; ++k) {
        const Index e = cfg.triangle_edges(t)[k];
        if (e == TriangularConfiguration::kNoIndex)
          throw PreconditionError("part " + std::to_string(p) + " has a dangling triangle edge");
        spec.edges[k] = edge_name[edges.find(edge_base[p] + e)];
      }
      out_triangles.push_back(std::move(spec));
    }
  }

  for (const auto* names : {&out_vertices}) {
    std::set<Id> seen(names->begin(), names->end());
    if (seen.size() != names->size())
      throw PreconditionError("compose: prefixes produce clashing vertex ids");
  }
  {
    std::set<Id> seen;
    for (const auto& e : out_edges)
      if (!seen.insert(e.id).second)
        throw PreconditionError("compose: prefixes produce clashing edge id '" + e.id + "'");
    seen.clear();
    for (const auto& t : out_triangles)
      if (!seen.insert(t.id).second)
        throw PreconditionError("compose: prefixes produce clashing triangle id '" + t.id + "'");
  }

  TriangularConfiguration result(std::move(out_vertices), std::move(out_edges),
                                 std::move(out_triangles));
  require_valid(result);
  return result;
}

TriangularConfiguration compose(const std::vector<TriangularConfiguration>& configs,
                                const std::vector<EdgeIdentification>& identifications) {
  std::vector<ComposePart> parts;
  parts.reserve(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i)
    parts.push_back({&configs[i], configs.size() == 1 ? std::string() : std::to_string(i) + "."});
  return compose(parts, identifications);
}

}  // namespace kas3
