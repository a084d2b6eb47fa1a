#include "kas3/config.hpp"

#include "kas3/error.hpp"

#include <algorithm>
#include <set>

namespace kas3 {

namespace {

template <class T, class Key>
void sort_and_index(std::vector<T>& items, Key key, std::unordered_map<Id, Index>& lookup,
                    const char* what) {
  std::sort(items.begin(), items.end(),
            [&](const T& a, const T& b) { return key(a) < key(b); });
  lookup.reserve(items.size());
  for (Index i = 0; i < items.size(); ++i) {
    if (!lookup.emplace(key(items[i]), i).second)
      throw SchemaError(std::string("duplicate ") + what + " id '" + key(items[i]) + "'");
  }
}

}  // namespace

TriangularConfiguration::TriangularConfiguration(std::vector<Id> vertices,
                                                 std::vector<EdgeSpec> edges,
                                                 std::vector<TriangleSpec> triangles)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), triangles_(std::move(triangles)) {
  for (auto& e : edges_)
    if (e.ends && e.ends->second < e.ends->first) std::swap(e.ends->first, e.ends->second);
  for (auto& t : triangles_) std::sort(t.edges.begin(), t.edges.end());

  sort_and_index(vertices_, [](const Id& v) -> const Id& { return v; }, vertex_lookup_, "vertex");
  sort_and_index(edges_, [](const EdgeSpec& e) -> const Id& { return e.id; }, edge_lookup_, "edge");
  sort_and_index(triangles_, [](const TriangleSpec& t) -> const Id& { return t.id; },
                 triangle_lookup_, "triangle");

  edge_triangles_.resize(edges_.size());
  triangle_edges_.resize(triangles_.size());
  for (Index t = 0; t < triangles_.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      auto it = edge_lookup_.find(triangles_[t].edges[k]);
      triangle_edges_[t][k] = it == edge_lookup_.end() ? kNoIndex : it->second;
    }
    // Only index incidences of well-formed triangles; validate reports the rest.
    const auto& te = triangle_edges_[t];
    const bool ok = te[0] != kNoIndex && te[1] != kNoIndex && te[2] != kNoIndex &&
                    te[0] != te[1] && te[1] != te[2] && te[0] != te[2];
    if (ok)
      for (Index e : te) edge_triangles_[e].push_back(t);
  }

  has_vertex_data_ = !edges_.empty();
  edge_vertices_.resize(edges_.size());
  for (Index e = 0; e < edges_.size(); ++e) {
    if (!edges_[e].ends) {
      has_vertex_data_ = false;
      continue;
    }
    auto a = vertex_lookup_.find(edges_[e].ends->first);
    auto b = vertex_lookup_.find(edges_[e].ends->second);
    if (a == vertex_lookup_.end() || b == vertex_lookup_.end()) {
      has_vertex_data_ = false;
      continue;
    }
    edge_vertices_[e] = std::make_pair(a->second, b->second);
  }
}

std::optional<Index> TriangularConfiguration::vertex_index(std::string_view id) const {
  auto it = vertex_lookup_.find(Id(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> TriangularConfiguration::edge_index(std::string_view id) const {
  auto it = edge_lookup_.find(Id(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> TriangularConfiguration::triangle_index(std::string_view id) const {
  auto it = triangle_lookup_.find(Id(id));
  if (it == triangle_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<Index, Index>> TriangularConfiguration::edge_vertices(Index e) const {
  return edge_vertices_[e];
}

std::optional<std::array<Index, 3>> TriangularConfiguration::triangle_vertices(Index t) const {
  std::set<Index> vs;
  for (Index e : triangle_edges_[t]) {
    if (e == kNoIndex || !edge_vertices_[e]) return std::nullopt;
    vs.insert(edge_vertices_[e]->first);
    vs.insert(edge_vertices_[e]->second);
  }
  if (vs.size() != 3) return std::nullopt;
  std::array<Index, 3> out{};
  std::copy(vs.begin(), vs.end(), out.begin());
  return out;
}

Matching Matching::from(std::vector<Id> ids) {
  std::sort(ids.begin(), ids.end());
  return Matching{std::move(ids)};
}

bool Matching::contains(const Id& t) const {
  return std::binary_search(triangles.begin(), triangles.end(), t);
}

std::vector<Violation> validate(const TriangularConfiguration& config) {
  std::vector<Violation> out;

  std::map<std::pair<Index, Index>, Index> pair_owner;
  for (Index e = 0; e < config.edge_count(); ++e) {
    const EdgeSpec& spec = config.edges()[e];
    if (!spec.ends) continue;
    if (spec.ends->first == spec.ends->second) {
      out.push_back({"degenerate edge", spec.id, "edge joins vertex '" + spec.ends->first +
                                                     "' to itself"});
      continue;
    }
    const auto vs = config.edge_vertices(e);
    if (!vs) {
      out.push_back({"unknown vertex", spec.id,
                     "edge references a vertex missing from the vertex set"});
      continue;
    }
    auto [it, inserted] = pair_owner.emplace(*vs, e);
    if (!inserted)
      out.push_back({"parallel edge", spec.id,
                     "edge has the same vertex pair as '" + config.edges()[it->second].id + "'"});
  }

  std::map<std::array<Index, 3>, Index> triple_owner;
  std::map<std::pair<Index, Index>, Index> pair_triangle;
  for (Index t = 0; t < config.triangle_count(); ++t) {
    const TriangleSpec& spec = config.triangles()[t];
    const auto& te = config.triangle_edges(t);
    bool dangling = false;
    for (int k = 0; k < 3; ++k) {
      if (te[k] == TriangularConfiguration::kNoIndex) {
        out.push_back({"dangling edge", spec.id,
                       "triangle references missing edge '" + spec.edges[k] + "'"});
        dangling = true;
      }
    }
    if (dangling) continue;
    if (te[0] == te[1] || te[1] == te[2] || te[0] == te[2]) {
      out.push_back({"repeated edge", spec.id, "triangle edges are not pairwise distinct"});
      continue;
    }
    std::array<Index, 3> key = te;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = triple_owner.emplace(key, t);
    if (!inserted) {
      out.push_back({"duplicate triangle", spec.id,
                     "same edge triple as triangle '" + config.triangles()[it->second].id + "'"});
      continue;
    }
    std::optional<Index> clash;
    for (auto pair : {std::pair{key[0], key[1]}, std::pair{key[1], key[2]}, std::pair{key[0], key[2]}}) {
      auto [owner, fresh] = pair_triangle.emplace(pair, t);
      if (!fresh && !clash) clash = owner->second;
    }
    if (clash) {
      out.push_back({"non-simplicial triangle", spec.id,
                     "shares two edges with triangle '" + config.triangles()[*clash].id + "'"});
      continue;
    }

    // Simplicial condition, checked when all three edges carry vertices.
    std::array<std::pair<Index, Index>, 3> ev;
    bool all = true;
    for (int k = 0; k < 3; ++k) {
      auto v = config.edge_vertices(te[k]);
      if (!v) {
        all = false;
        break;
      }
      ev[k] = *v;
    }
    if (!all) continue;
    auto shared = [](const std::pair<Index, Index>& a,
                     const std::pair<Index, Index>& b) -> std::optional<Index> {
      int n = 0;
      Index s = 0;
      for (Index x : {a.first, a.second})
        if (x == b.first || x == b.second) {
          ++n;
          s = x;
        }
      if (n != 1) return std::nullopt;
      return s;
    };
    const auto s01 = shared(ev[0], ev[1]);
    const auto s12 = shared(ev[1], ev[2]);
    const auto s02 = shared(ev[0], ev[2]);
    if (!s01 || !s12 || !s02 || *s01 == *s12 || *s12 == *s02 || *s01 == *s02)
      out.push_back({"non-simplicial triangle", spec.id,
                     "triangle edges do not bound a triangle on three distinct vertices"});
  }
  return out;
}

void require_valid(const TriangularConfiguration& config) {
  const auto report = validate(config);
  if (report.empty()) return;
  std::string msg = "invalid configuration:";
  for (std::size_t i = 0; i < report.size() && i < 5; ++i)
    msg += " [" + report[i].kind + " at '" + report[i].subject + "': " + report[i].message + "]";
  if (report.size() > 5) msg += " (+" + std::to_string(report.size() - 5) + " more)";
  throw PreconditionError(msg);
}

TriangularConfiguration without_vertex_data(const TriangularConfiguration& config) {
  std::vector<EdgeSpec> edges;
  edges.reserve(config.edge_count());
  for (const auto& e : config.edges()) edges.push_back({e.id, std::nullopt});
  return TriangularConfiguration({}, std::move(edges), config.triangles());
}

bool is_edge_tripartition(const TriangularConfiguration& config, const EdgeTripartition& parts) {
  for (const auto& e : config.edges()) {
    const int c = parts.of(e.id);
    if (c < 1 || c > 3) return false;
  }
  for (const auto& t : config.triangles()) {
    int seen = 0;
    for (const auto& e : t.edges) seen |= 1 << parts.of(e);
    if (seen != 0b1110) return false;
  }
  return true;
}

bool is_vertex_tripartition(const TriangularConfiguration& config,
                            const VertexTripartition& parts) {
  for (const auto& v : config.vertices()) {
    const int c = parts.of(v);
    if (c < 1 || c > 3) return false;
  }
  for (Index t = 0; t < config.triangle_count(); ++t) {
    const auto vs = config.triangle_vertices(t);
    if (!vs) return false;
    int seen = 0;
    for (Index v : *vs) seen |= 1 << parts.of(config.vertices()[v]);
    if (seen != 0b1110) return false;
  }
  return true;
}

}  // namespace kas3
