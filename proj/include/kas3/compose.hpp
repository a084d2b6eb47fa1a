#pragma once

#include "kas3/config.hpp"

#include <string>
#include <vector>

namespace kas3 {

/// One operand of `compose`. Every id of the part is renamed to
/// `prefix + id` in the result unless it is merged into another id.
struct ComposePart {
  const TriangularConfiguration* config;
  std::string prefix;
};

struct EdgeRef {
  std::size_t part;
  Id edge;
};

struct EdgeIdentification {
  EdgeRef first;
  EdgeRef second;
};

/// Disjoint union of the parts followed by the quotient on identified edges
/// (equivalence closure). Each merged edge keeps the name of its member from
/// the lowest part (ties broken by id). When identified edges carry vertex
/// pairs, the vertices they share with other identified edges are merged
/// accordingly; remaining endpoint ambiguity is resolved in pair order.
///
/// Throws PreconditionError when the quotient is not a valid configuration
/// (a triangle with repeated edges, an edge collapsed to a point,
/// inconsistent vertex unification, ...).
TriangularConfiguration compose(const std::vector<ComposePart>& parts,
                                const std::vector<EdgeIdentification>& identifications);

/// Convenience overload with prefixes "0.", "1.", ... (empty prefix when
/// there is a single part).
TriangularConfiguration compose(const std::vector<TriangularConfiguration>& configs,
                                const std::vector<EdgeIdentification>& identifications);

}  // namespace kas3
