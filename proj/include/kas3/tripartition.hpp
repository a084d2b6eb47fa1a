#pragma once

#include "kas3/config.hpp"

#include <map>
#include <optional>

namespace kas3 {

/// Extends `pins` (edge id -> class in {1,2,3}) to a total edge labelling in
/// which every triangle sees each class once. Exhaustive backtracking with
/// forward checking; the first solution in canonical order is returned
/// (most constrained edge first, lowest class first). nullopt iff none exists.
std::optional<EdgeTripartition> find_edge_tripartition(const TriangularConfiguration& config,
                                                       const std::map<Id, int>& pins = {});

/// Vertex-level counterpart. Requires vertex data on every edge.
std::optional<VertexTripartition> find_vertex_tripartition(const TriangularConfiguration& config,
                                                           const std::map<Id, int>& pins = {});

}  // namespace kas3
