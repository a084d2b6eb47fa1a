#pragma once

#include "kas3/config.hpp"
#include "kas3/polynomial.hpp"

#include <set>
#include <vector>

namespace kas3 {

/// Edges of `config` covered by no triangle of `matching`.
/// Throws PreconditionError("not a matching") when two triangles share an edge.
std::set<Id> defect(const TriangularConfiguration& config, const Matching& matching);

/// Union of the edges of the matching's triangles.
std::set<Id> covered_edges(const TriangularConfiguration& config, const Matching& matching);

/// Throws unless `matching` names existing triangles that pairwise share no edge.
void require_matching(const TriangularConfiguration& config, const Matching& matching);

/// All matchings whose defect lies inside `allowed`, canonically ordered
/// (ids sorted within a matching, matchings sorted lexicographically).
/// allowed = {} yields the perfect matchings.
std::vector<Matching> enumerate_matchings_with_defect_within(const TriangularConfiguration& config,
                                                             const std::set<Id>& allowed,
                                                             unsigned threads = 1);

std::vector<Matching> enumerate_perfect_matchings(const TriangularConfiguration& config,
                                                  unsigned threads = 1);

/// Sum over perfect matchings P of x^{w(P)}.
Polynomial perfect_matching_polynomial(const TriangularConfiguration& config,
                                       const Weighting& weighting, unsigned threads = 1);

/// Sets of pairwise vertex-disjoint triangles covering every vertex.
/// Throws PreconditionError when the configuration lacks vertex data.
std::vector<Matching> enumerate_perfect_strong_matchings(const TriangularConfiguration& config,
                                                         unsigned threads = 1);

}  // namespace kas3
