#pragma once

#include "kas3/code.hpp"
#include "kas3/config.hpp"

namespace kas3 {

/// Edge-by-triangle 0/1 incidence matrix (rows in edge order, columns in
/// triangle order).
GFMatrix incidence_matrix(const TriangularConfiguration& config);

/// Weight enumerator of the cycle space ker(incidence) over GF(p).
/// Throws GuardExceeded when the kernel is too large to enumerate.
Polynomial cycle_space_weight_enumerator(const TriangularConfiguration& config, std::uint32_t p);

}  // namespace kas3
