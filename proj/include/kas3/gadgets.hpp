#pragma once

#include "kas3/config.hpp"
#include "kas3/config_json.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kas3 {

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Checks actually re-run on one gadget instance.
struct Certificate {
  std::vector<CertificateCheck> checks;

  bool passed() const;
  const CertificateCheck* find(const std::string& name) const;
};

enum class GadgetKind { Tunnel, S5, MatchingTriangle };

std::string to_string(GadgetKind kind);

/// A configuration with labelled "ending" empty triangles.
///
/// `named` holds the distinguished matchings of the kind: "ML"/"MR" for the
/// tunnel (defect = end 0 / end 1) and "M1"/"M0" for S5 and the matching
/// triangle (perfect / defect = all ends). `tripartition` is the certified
/// edge tripartition with monochromatic ends.
struct Gadget {
  GadgetKind kind;
  TriangularConfiguration config;
  std::vector<std::array<Id, 3>> ends;
  std::map<std::string, Matching> named;
  EdgeTripartition tripartition;
  Certificate certificate;

  std::vector<Id> end_edges() const;
};

/// Octahedron band between two removed faces: 6 triangles, 12 edges, ends
/// {u1u2,u2u3,u1u3} and {v1v2,v2v3,v1v3}.
Gadget make_tunnel();

/// Octahedron with five faces filled (t1..t5) and three empty ending faces.
Gadget make_s5();

/// S5 with a tunnel glued onto each of its ends; the ends of the result are
/// the three far tunnel ends.
Gadget make_matching_triangular_triangle();

/// Regenerates the certificate of `g` from scratch by exhaustive enumeration.
/// Never throws for a failed property; failures are reported as checks.
Certificate certify(const Gadget& g);

/// Core JSON format plus "ends" and the certified "edge_classes".
Json gadget_to_json(const Gadget& g);
Json certificate_to_json(const Certificate& c);

/// Glues a fresh matching triangular triangle onto three pairwise
/// edge-disjoint triangles of `config`: its ends are identified with the edge
/// triples of t1, t2, t3 in that order. Original triangles stay. New ids get
/// `prefix`; an empty prefix selects "mtt(t1,t2,t3).".
TriangularConfiguration link_by_mtt(const TriangularConfiguration& config, const Id& t1,
                                    const Id& t2, const Id& t3, std::string prefix = {});

TriangularConfiguration remove_triangles(const TriangularConfiguration& config,
                                         const std::vector<Id>& triangles);

/// Per-triangle block of the reduction.
struct ReductionBlock {
  Id source;      // triangle t of the input
  std::string prefix;
  Id designated;  // triangle of M1(T_t) carrying w(t)
  Matching m1;    // M1(T_t), ids in the reduced configuration
  Matching m0;    // M0(T_t)
};

struct ReductionResult {
  TriangularConfiguration config;
  Weighting weighting;
  EdgeTripartition tripartition;
  std::vector<ReductionBlock> blocks;  // in input triangle order

  /// f(S) = {M1(T_t) : t in S} u {M0(T_t) : t not in S}.
  Matching forward(const Matching& subset) const;
};

/// Three disjoint copies of `config` (prefixes "1:", "2:", "3:"); each
/// triangle t is replaced by a matching triangular triangle linking its three
/// copies (prefix "T(t)."). Perfect matchings correspond bijectively and
/// weight-preservingly under `forward`.
ReductionResult tripartite_reduction(const TriangularConfiguration& config,
                                     const Weighting& weighting);

}  // namespace kas3
