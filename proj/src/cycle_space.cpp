#include "kas3/cycle_space.hpp"

namespace kas3 {

GFMatrix incidence_matrix(const TriangularConfiguration& config) {
  require_valid(config);
  GFMatrix a(config.edge_count(), GFVector(config.triangle_count(), 0));
  for (Index t = 0; t < config.triangle_count(); ++t)
    for (Index e : config.triangle_edges(t)) a[e][t] = 1;
  return a;
}

Polynomial cycle_space_weight_enumerator(const TriangularConfiguration& config, std::uint32_t p) {
  const auto basis = gf_p_nullspace(incidence_matrix(config), p, config.triangle_count());
  return span_weight_enumerator(basis, p, config.triangle_count());
}

}  // namespace kas3
