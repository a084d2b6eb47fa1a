#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kas3 {

using Id = std::string;
using Index = std::uint32_t;

struct EdgeSpec {
  Id id;
  /// Unordered vertex pair, stored sorted. Absent for edge-only configurations.
  std::optional<std::pair<Id, Id>> ends;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct TriangleSpec {
  Id id;
  /// Unordered edge triple, stored sorted.
  std::array<Id, 3> edges;

  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;
};

/// A 2-dimensional simplicial complex whose maximal simplices are triangles
/// or edges. Edges are first-class ids; vertex pairs are optional.
///
/// Immutable once constructed. Ids are kept in lexicographic order, and every
/// index-based accessor refers to that order. The constructor rejects
/// duplicate ids but otherwise accepts invariant violations so that
/// `validate` can report them; index accessors that depend on a dangling
/// reference return kNoIndex.
class TriangularConfiguration {
 public:
  static constexpr Index kNoIndex = static_cast<Index>(-1);

  TriangularConfiguration() = default;
  TriangularConfiguration(std::vector<Id> vertices, std::vector<EdgeSpec> edges,
                          std::vector<TriangleSpec> triangles);

  const std::vector<Id>& vertices() const { return vertices_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const std::vector<TriangleSpec>& triangles() const { return triangles_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }

  std::optional<Index> vertex_index(std::string_view id) const;
  std::optional<Index> edge_index(std::string_view id) const;
  std::optional<Index> triangle_index(std::string_view id) const;

  const std::array<Index, 3>& triangle_edges(Index t) const { return triangle_edges_[t]; }
  std::span<const Index> edge_triangles(Index e) const { return edge_triangles_[e]; }

  /// True when every edge carries a vertex pair.
  bool has_vertex_data() const { return has_vertex_data_; }
  /// Vertex indices of an edge; requires vertex data on that edge.
  std::optional<std::pair<Index, Index>> edge_vertices(Index e) const;
  /// Sorted vertex indices of a triangle; nullopt unless its edges span
  /// exactly three known vertices.
  std::optional<std::array<Index, 3>> triangle_vertices(Index t) const;

  friend bool operator==(const TriangularConfiguration& a, const TriangularConfiguration& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.triangles_ == b.triangles_;
  }

 private:
  std::vector<Id> vertices_;
  std::vector<EdgeSpec> edges_;
  std::vector<TriangleSpec> triangles_;

  std::unordered_map<Id, Index> vertex_lookup_;
  std::unordered_map<Id, Index> edge_lookup_;
  std::unordered_map<Id, Index> triangle_lookup_;
  std::vector<std::array<Index, 3>> triangle_edges_;
  std::vector<std::vector<Index>> edge_triangles_;
  std::vector<std::optional<std::pair<Index, Index>>> edge_vertices_;
  bool has_vertex_data_ = false;
};

/// Exact integer triangle weights; triangles without an entry weigh 1.
struct Weighting {
  std::map<Id, std::int64_t> weights;

  std::int64_t of(const Id& triangle) const {
    auto it = weights.find(triangle);
    return it == weights.end() ? 1 : it->second;
  }
};

/// A set of triangle ids, kept sorted.
struct Matching {
  std::vector<Id> triangles;

  static Matching from(std::vector<Id> ids);
  std::size_t size() const { return triangles.size(); }
  bool contains(const Id& t) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
};

template <class Tag>
struct Tripartition {
  /// id -> class label in {1, 2, 3}.
  std::map<Id, int> classes;

  int of(const Id& id) const {
    auto it = classes.find(id);
    return it == classes.end() ? 0 : it->second;
  }
  /// Members of classes 1, 2, 3, each in canonical order.
  std::array<std::vector<Id>, 3> members() const {
    std::array<std::vector<Id>, 3> out;
    for (const auto& [id, c] : classes)
      if (c >= 1 && c <= 3) out[c - 1].push_back(id);
    return out;
  }

  friend bool operator==(const Tripartition&, const Tripartition&) = default;
};

struct EdgeClassTag {};
struct VertexClassTag {};
using EdgeTripartition = Tripartition<EdgeClassTag>;
using VertexTripartition = Tripartition<VertexClassTag>;

struct Violation {
  std::string kind;  // e.g. "dangling edge", "duplicate triangle"
  Id subject;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every configuration invariant. Violations are data; the report is
/// empty iff the configuration is valid.
std::vector<Violation> validate(const TriangularConfiguration& config);

/// Throws PreconditionError listing the first violations, if any.
void require_valid(const TriangularConfiguration& config);

/// Same configuration with every vertex pair dropped.
TriangularConfiguration without_vertex_data(const TriangularConfiguration& config);

/// Edge triple check used for gadget ends and tripartition checks:
/// true iff every triangle has one member of each class.
bool is_edge_tripartition(const TriangularConfiguration& config, const EdgeTripartition& parts);
bool is_vertex_tripartition(const TriangularConfiguration& config,
                            const VertexTripartition& parts);

}  // namespace kas3
