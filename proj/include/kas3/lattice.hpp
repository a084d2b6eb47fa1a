#pragma once

#include "kas3/bipartite.hpp"
#include "kas3/kasteleyn.hpp"
#include "kas3/number.hpp"
#include "kas3/polynomial.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kas3 {

using GridPoint = std::array<int, 3>;

/// a x b x c box of grid points with open boundary. Even points (x+y+z even)
/// form the left side of `graph`, odd points the right side, each in
/// lexicographic order.
struct CubicLattice {
  std::array<int, 3> dims{};
  std::vector<GridPoint> even;
  std::vector<GridPoint> odd;
  BipartiteGraph graph;

  std::size_t vertex_count() const { return even.size() + odd.size(); }
  std::size_t edge_count() const { return graph.edges.size(); }
  bool balanced() const { return even.size() == odd.size(); }
};

/// Throws PreconditionError unless a, b, c >= 1.
CubicLattice cubic_lattice(int a, int b, int c);

/// Per-edge weights keyed by (even index, odd index); missing edges weigh 1.
using LatticeEdgeWeights = std::map<BipartiteGraph::Edge, std::int64_t>;

/// The dimer generating function computed three ways.
struct DimerResult {
  Polynomial direct;  // enumeration of the lattice's perfect matchings
  Polynomial tensor;  // permanent3 of the vertex-adjacency tensor of T(Q)
  Polynomial ryser;   // permanent2 of the weighted biadjacency
  bool odd_vertex_count = false;

  bool agree() const { return direct == tensor && direct == ryser; }
  Integer count() const { return direct.coefficient_sum(); }
};

inline constexpr std::size_t kMaxDimerVertices = 32;

/// Throws GuardExceeded above 32 vertices. Odd or unbalanced boxes yield the
/// zero polynomial on every pipeline.
DimerResult dimer_polynomial(const CubicLattice& q, const LatticeEdgeWeights& weights = {},
                             unsigned threads = 1);

using Point3 = std::array<Rational, 3>;

/// T(Q) with exact coordinates.
struct EmbeddedComplex {
  TSkeleton skeleton;
  std::map<Id, Point3> coordinates;

  const TriangularConfiguration& config() const { return skeleton.config; }
};

/// Lattice vertices keep their grid position; the w(.,e) vertices sit within
/// 1/8 of the midpoint of e and the remaining auxiliary vertices within 1/4
/// of their lattice vertex. Throws PreconditionError for an unbalanced box
/// and InternalError if the result fails embedding_problems.
EmbeddedComplex embed_T(const CubicLattice& q);

/// Coincident vertices and collinear triangles; empty when valid.
std::vector<std::string> embedding_problems(const EmbeddedComplex& ec);

/// Exact decimal rendering of a rational whose denominator is a power of 2.
std::string dyadic_decimal(const Rational& v);

/// OFF text: header, vertex coordinates in configuration vertex order, then
/// triangles as vertex-index triples in configuration triangle order.
std::string to_off(const EmbeddedComplex& ec);

}  // namespace kas3
