#include "kas3/tensor3.hpp"

#include <set>

namespace kas3 {

int permutation_sign(std::span<const std::uint32_t> perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Tensor3<Polynomial> triadjacency(const TriangularConfiguration& config,
                                 const EdgeTripartition& parts, const Weighting& weighting) {
  if (!is_edge_tripartition(config, parts))
    throw PreconditionError("triadjacency needs a valid edge tripartition");
  const auto members = parts.members();
  std::map<Id, std::uint32_t> position;
  for (const auto& list : members)
    for (std::uint32_t i = 0; i < list.size(); ++i) position[list[i]] = i;
  Tensor3<Polynomial> out(members[0].size(), members[1].size(), members[2].size());
  for (const auto& t : config.triangles()) {
    std::array<std::uint32_t, 3> at{};
    for (const auto& e : t.edges) at[parts.of(e) - 1] = position.at(e);
    const std::int64_t w = weighting.of(t.id);
    if (w < 0) throw PreconditionError("triangle '" + t.id + "' has a negative weight");
    out.set(at[0], at[1], at[2], Polynomial::monomial(w));
  }
  return out.padded();
}

std::array<std::vector<Id>, 3> vertex_class_order(
    const TriangularConfiguration& config, const VertexTripartition& parts,
    const std::optional<std::array<std::vector<Id>, 3>>& order) {
  if (config.edge_count() > 0 && !config.has_vertex_data())
    throw PreconditionError("vertex_adjacency needs vertex data");
  if (!is_vertex_tripartition(config, parts))
    throw PreconditionError("vertex_adjacency needs a valid vertex tripartition");
  auto members = parts.members();
  if (!order) return members;
  for (int c = 0; c < 3; ++c) {
    std::vector<Id> given = (*order)[c];
    std::sort(given.begin(), given.end());
    if (given != members[c])
      throw PreconditionError("explicit order for class " + std::to_string(c + 1) +
                              " is not a permutation of that class");
  }
  return *order;
}

}  // namespace kas3
