#include "kas3/gadgets.hpp"

#include "kas3/compose.hpp"
#include "kas3/error.hpp"
#include "kas3/matching.hpp"
#include "kas3/tripartition.hpp"

#include <algorithm>
#include <set>

namespace kas3 {

namespace {

Id edge_id(const Id& a, const Id& b) { return a < b ? a + b : b + a; }

EdgeSpec edge(const Id& a, const Id& b) { return {edge_id(a, b), std::make_pair(a, b)}; }

TriangleSpec face(const Id& id, const Id& a, const Id& b, const Id& c) {
  return {id, {edge_id(a, b), edge_id(b, c), edge_id(a, c)}};
}

std::array<Id, 3> face_edges(const Id& a, const Id& b, const Id& c) {
  std::array<Id, 3> out{edge_id(a, b), edge_id(b, c), edge_id(a, c)};
  std::sort(out.begin(), out.end());
  return out;
}

// The twelve edges of the octahedron with bottom face u1u2u3 and top face
// v1v2v3; the side edges form the zigzag u1-v1-u2-v2-u3-v3-u1.
std::vector<EdgeSpec> octahedron_edges() {
  return {edge("u1", "u2"), edge("u2", "u3"), edge("u1", "u3"), edge("v1", "v2"),
          edge("v2", "v3"), edge("v1", "v3"), edge("u1", "v1"), edge("u2", "v1"),
          edge("u2", "v2"), edge("u3", "v2"), edge("u3", "v3"), edge("u1", "v3")};
}

std::vector<Id> octahedron_vertices() { return {"u1", "u2", "u3", "v1", "v2", "v3"}; }

std::set<Id> as_set(const std::array<Id, 3>& a) { return {a.begin(), a.end()}; }

Matching with_prefix(const Matching& m, const std::string& prefix) {
  std::vector<Id> ids;
  for (const auto& t : m.triangles) ids.push_back(prefix + t);
  return Matching::from(std::move(ids));
}

std::string describe(const Matching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.triangles.size(); ++i) s += (i ? "," : "") + m.triangles[i];
  return s + "}";
}

void add(Certificate& c, std::string name, bool passed, std::string detail) {
  c.checks.push_back({std::move(name), passed, std::move(detail)});
}

void check_ends(const Gadget& g, Certificate& cert) {
  bool ok = true;
  std::string detail;
  std::set<Id> seen;
  for (std::size_t k = 0; k < g.ends.size(); ++k) {
    const auto& end = g.ends[k];
    std::vector<Index> idx;
    for (const auto& e : end) {
      auto i = g.config.edge_index(e);
      if (!i) {
        ok = false;
        detail += "end " + std::to_string(k) + " names missing edge " + e + "; ";
        continue;
      }
      idx.push_back(*i);
      if (!seen.insert(e).second) {
        ok = false;
        detail += "edge " + e + " used by two ends; ";
      }
    }
    if (idx.size() != 3) continue;
    if (g.config.has_vertex_data()) {
      std::set<Index> vs;
      for (Index e : idx) {
        vs.insert(g.config.edge_vertices(e)->first);
        vs.insert(g.config.edge_vertices(e)->second);
      }
      if (vs.size() != 3) {
        ok = false;
        detail += "end " + std::to_string(k) + " does not bound a triangle; ";
      }
    }
    std::array<Index, 3> key{idx[0], idx[1], idx[2]};
    std::sort(key.begin(), key.end());
    for (Index t = 0; t < g.config.triangle_count(); ++t) {
      auto te = g.config.triangle_edges(t);
      std::sort(te.begin(), te.end());
      if (te == key) {
        ok = false;
        detail += "end " + std::to_string(k) + " is filled by triangle " +
                  g.config.triangles()[t].id + "; ";
      }
    }
  }
  if (ok) detail = std::to_string(g.ends.size()) + " edge-disjoint empty triangles";
  add(cert, "ends.empty_triangles", ok, detail);
}

// Tripartition with end k pinned to class classes[k]; also checks the stored one.
void check_tripartition(const Gadget& g, const std::vector<int>& classes, Certificate& cert) {
  std::map<Id, int> pins;
  for (std::size_t k = 0; k < g.ends.size(); ++k)
    for (const auto& e : g.ends[k]) pins[e] = classes[k];
  const auto found = find_edge_tripartition(g.config, pins);
  std::string detail;
  if (found) {
    const auto members = found->members();
    detail = "class sizes (" + std::to_string(members[0].size()) + "," +
             std::to_string(members[1].size()) + "," + std::to_string(members[2].size()) + ")";
  } else {
    detail = "no tripartition extends the end pins";
  }
  add(cert, "tripartite.ends_pinned", found.has_value(), detail);

  bool stored_ok = is_edge_tripartition(g.config, g.tripartition);
  for (const auto& [e, c] : pins) stored_ok = stored_ok && g.tripartition.of(e) == c;
  add(cert, "tripartite.stored_partition_valid", stored_ok,
      stored_ok ? "every triangle rainbow, ends monochromatic as pinned"
                : "stored tripartition violates a triangle or an end pin");
}

Certificate certify_tunnel(const Gadget& g) {
  Certificate cert;
  check_ends(g, cert);
  if (g.ends.size() != 2) {
    add(cert, "tunnel.two_ends", false, "expected 2 ends");
    return cert;
  }
  const auto ends = g.end_edges();
  const auto within =
      enumerate_matchings_with_defect_within(g.config, std::set<Id>(ends.begin(), ends.end()));
  add(cert, "tunnel.matchings_within_ends.count", within.size() == 2,
      std::to_string(within.size()) + " matchings with defect inside the end edges");

  for (int k = 0; k < 2; ++k) {
    const std::string label = k == 0 ? "ML" : "MR";
    std::vector<Matching> hits;
    for (const auto& m : within)
      if (defect(g.config, m) == as_set(g.ends[k])) hits.push_back(m);
    auto it = g.named.find(label);
    const bool ok = hits.size() == 1 && it != g.named.end() && it->second == hits[0];
    add(cert, "tunnel." + label + ".unique_defect_end" + std::to_string(k), ok,
        std::to_string(hits.size()) + " matching(s) with defect = end " + std::to_string(k) +
            (hits.empty() ? "" : ": " + describe(hits[0])));
  }

  std::size_t stray = 0;
  for (const auto& m : within) {
    const auto d = defect(g.config, m);
    if (d != as_set(g.ends[0]) && d != as_set(g.ends[1])) ++stray;
  }
  add(cert, "tunnel.no_other_defect_within_ends", stray == 0,
      std::to_string(stray) + " matching(s) with another defect inside the ends");

  check_tripartition(g, {1, 1}, cert);
  return cert;
}

Certificate certify_s5(const Gadget& g) {
  Certificate cert;
  check_ends(g, cert);
  if (g.ends.size() != 3) {
    add(cert, "s5.three_ends", false, "expected 3 ends");
    return cert;
  }
  const auto perfect = enumerate_perfect_matchings(g.config);
  {
    auto it = g.named.find("M1");
    const bool ok = perfect.size() == 1 && perfect[0].size() == 4 && it != g.named.end() &&
                    it->second == perfect[0];
    add(cert, "s5.unique_perfect_matching", ok,
        std::to_string(perfect.size()) + " perfect matching(s)" +
            (perfect.empty() ? "" : ", first " + describe(perfect[0])));
  }
  const auto all_ends = g.end_edges();
  const std::set<Id> all(all_ends.begin(), all_ends.end());
  std::vector<Matching> full;
  for (const auto& m : enumerate_matchings_with_defect_within(g.config, all))
    if (defect(g.config, m) == all) full.push_back(m);
  {
    auto it = g.named.find("M0");
    const bool ok = full.size() == 1 && full[0].size() == 1 && it != g.named.end() &&
                    it->second == full[0];
    add(cert, "s5.unique_all_ends_defect", ok,
        std::to_string(full.size()) + " matching(s) with defect = all end edges" +
            (full.empty() ? "" : ", first " + describe(full[0])));
  }
  check_tripartition(g, {1, 2, 3}, cert);
  return cert;
}

Certificate certify_mtt(const Gadget& g) {
  Certificate cert;
  check_ends(g, cert);
  if (g.ends.size() != 3) {
    add(cert, "mtt.three_ends", false, "expected 3 ends");
    return cert;
  }
  const auto all_ends = g.end_edges();
  const std::set<Id> all(all_ends.begin(), all_ends.end());
  const auto within = enumerate_matchings_with_defect_within(g.config, all);
  add(cert, "mtt.matchings_within_ends.count", within.size() == 2,
      std::to_string(within.size()) + " matchings with defect inside the 9 end edges");

  std::vector<Matching> perfect, full;
  std::size_t proper = 0;
  for (const auto& m : within) {
    const auto d = defect(g.config, m);
    if (d.empty())
      perfect.push_back(m);
    else if (d == all)
      full.push_back(m);
    else
      ++proper;
  }
  auto named_is = [&](const char* key, const std::vector<Matching>& hits) {
    auto it = g.named.find(key);
    return hits.size() == 1 && it != g.named.end() && it->second == hits[0];
  };
  add(cert, "mtt.M1.unique_perfect", named_is("M1", perfect),
      std::to_string(perfect.size()) + " perfect matching(s)");
  add(cert, "mtt.M0.unique_all_ends_defect", named_is("M0", full),
      std::to_string(full.size()) + " matching(s) with defect = all 9 end edges");
  add(cert, "mtt.no_proper_nonempty_defect", proper == 0,
      std::to_string(proper) + " matching(s) with defect strictly between");

  // M1 = M1(S5) u ML(T1..T3), M0 = M0(S5) u MR(T1..T3).
  const Gadget s5 = make_s5();
  const Gadget tunnel = make_tunnel();
  std::vector<Id> m1 = with_prefix(s5.named.at("M1"), "S5.").triangles;
  std::vector<Id> m0 = with_prefix(s5.named.at("M0"), "S5.").triangles;
  for (const char* p : {"T1.", "T2.", "T3."}) {
    for (const auto& t : with_prefix(tunnel.named.at("ML"), p).triangles) m1.push_back(t);
    for (const auto& t : with_prefix(tunnel.named.at("MR"), p).triangles) m0.push_back(t);
  }
  const bool blocks = g.named.count("M1") && g.named.count("M0") &&
                      g.named.at("M1") == Matching::from(m1) &&
                      g.named.at("M0") == Matching::from(m0);
  add(cert, "mtt.blocks_from_parts", blocks,
      blocks ? "M1 = M1(S5) u ML(Ti), M0 = M0(S5) u MR(Ti)" : "named matchings differ from parts");

  check_tripartition(g, {1, 2, 3}, cert);
  return cert;
}

void finish(Gadget& g, const std::vector<int>& end_classes) {
  std::map<Id, int> pins;
  for (std::size_t k = 0; k < g.ends.size(); ++k)
    for (const auto& e : g.ends[k]) pins[e] = end_classes[k];
  if (auto parts = find_edge_tripartition(g.config, pins)) g.tripartition = *parts;
  g.certificate = certify(g);
  if (!g.certificate.passed()) {
    std::string msg = to_string(g.kind) + " failed certification:";
    for (const auto& c : g.certificate.checks)
      if (!c.passed) msg += " [" + c.name + ": " + c.detail + "]";
    throw InternalError(msg);
  }
}

// Distinguished matchings by their defect, for construction only; certify
// re-derives them independently.
std::optional<Matching> matching_with_defect(const TriangularConfiguration& config,
                                             const std::set<Id>& allowed,
                                             const std::set<Id>& wanted) {
  std::optional<Matching> out;
  for (const auto& m : enumerate_matchings_with_defect_within(config, allowed))
    if (defect(config, m) == wanted) {
      if (out) return std::nullopt;
      out = m;
    }
  return out;
}

}  // namespace

bool Certificate::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const CertificateCheck* Certificate::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Tunnel: return "tunnel";
    case GadgetKind::S5: return "s5";
    case GadgetKind::MatchingTriangle: return "mtt";
  }
  return "unknown";
}

std::vector<Id> Gadget::end_edges() const {
  std::vector<Id> out;
  for (const auto& end : ends) out.insert(out.end(), end.begin(), end.end());
  std::sort(out.begin(), out.end());
  return out;
}

Gadget make_tunnel() {
  Gadget g{GadgetKind::Tunnel,
           TriangularConfiguration(octahedron_vertices(), octahedron_edges(),
                                   {face("up1", "u1", "u2", "v1"), face("up2", "u2", "u3", "v2"),
                                    face("up3", "u3", "u1", "v3"), face("dn1", "u2", "v1", "v2"),
                                    face("dn2", "u3", "v2", "v3"), face("dn3", "u1", "v3", "v1")}),
           {face_edges("u1", "u2", "u3"), face_edges("v1", "v2", "v3")},
           {},
           {},
           {}};
  const auto ends = g.end_edges();
  const std::set<Id> allowed(ends.begin(), ends.end());
  if (auto ml = matching_with_defect(g.config, allowed, as_set(g.ends[0]))) g.named["ML"] = *ml;
  if (auto mr = matching_with_defect(g.config, allowed, as_set(g.ends[1]))) g.named["MR"] = *mr;
  finish(g, {1, 1});
  return g;
}

Gadget make_s5() {
  Gadget g{GadgetKind::S5,
           TriangularConfiguration(octahedron_vertices(), octahedron_edges(),
                                   {face("t1", "u1", "u2", "v1"), face("t2", "u2", "u3", "v2"),
                                    face("t3", "u1", "u2", "u3"), face("t4", "u3", "u1", "v3"),
                                    face("t5", "v1", "v2", "v3")}),
           {face_edges("u2", "v1", "v2"), face_edges("u3", "v2", "v3"),
            face_edges("u1", "v3", "v1")},
           {},
           {},
           {}};
  const auto ends = g.end_edges();
  const std::set<Id> all(ends.begin(), ends.end());
  if (auto m1 = matching_with_defect(g.config, {}, {})) g.named["M1"] = *m1;
  if (auto m0 = matching_with_defect(g.config, all, all)) g.named["M0"] = *m0;
  finish(g, {1, 2, 3});
  return g;
}

Gadget make_matching_triangular_triangle() {
  const Gadget s5 = make_s5();
  const Gadget tunnel = make_tunnel();
  const std::vector<ComposePart> parts{
      {&s5.config, "S5."}, {&tunnel.config, "T1."}, {&tunnel.config, "T2."}, {&tunnel.config, "T3."}};
  std::vector<EdgeIdentification> ids;
  for (std::size_t k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      ids.push_back({{0, s5.ends[k][i]}, {k + 1, tunnel.ends[0][i]}});

  Gadget g{GadgetKind::MatchingTriangle, compose(parts, ids), {}, {}, {}, {}};
  for (const char* p : {"T1.", "T2.", "T3."}) {
    std::array<Id, 3> end;
    for (int i = 0; i < 3; ++i) end[i] = p + tunnel.ends[1][i];
    g.ends.push_back(end);
  }
  const auto ends = g.end_edges();
  const std::set<Id> all(ends.begin(), ends.end());
  if (auto m1 = matching_with_defect(g.config, all, {})) g.named["M1"] = *m1;
  if (auto m0 = matching_with_defect(g.config, all, all)) g.named["M0"] = *m0;
  finish(g, {1, 2, 3});
  return g;
}

Certificate certify(const Gadget& g) {
  switch (g.kind) {
    case GadgetKind::Tunnel: return certify_tunnel(g);
    case GadgetKind::S5: return certify_s5(g);
    case GadgetKind::MatchingTriangle: return certify_mtt(g);
  }
  return {};
}

Json gadget_to_json(const Gadget& g) {
  ConfigDocument doc{g.config, std::nullopt, g.tripartition, std::nullopt, g.ends};
  return to_json(doc);
}

Json certificate_to_json(const Certificate& c) {
  Json out = Json::array();
  for (const auto& check : c.checks) {
    Json j = Json::object();
    j["name"] = check.name;
    j["passed"] = check.passed;
    j["detail"] = check.detail;
    out.push_back(std::move(j));
  }
  return out;
}

TriangularConfiguration link_by_mtt(const TriangularConfiguration& config, const Id& t1,
                                    const Id& t2, const Id& t3, std::string prefix) {
  require_valid(config);
  const std::array<Id, 3> targets{t1, t2, t3};
  std::set<Id> used;
  for (const auto& t : targets) {
    auto idx = config.triangle_index(t);
    if (!idx) throw PreconditionError("link_by_mtt: unknown triangle '" + t + "'");
    for (const auto& e : config.triangles()[*idx].edges)
      if (!used.insert(e).second)
        throw PreconditionError("link_by_mtt: triangles " + t1 + ", " + t2 + ", " + t3 +
                                " are not pairwise edge-disjoint");
  }
  if (prefix.empty()) prefix = "mtt(" + t1 + "," + t2 + "," + t3 + ").";

  static const Gadget mtt = make_matching_triangular_triangle();
  static const TriangularConfiguration bare = without_vertex_data(mtt.config);
  const TriangularConfiguration& gadget = config.has_vertex_data() ? mtt.config : bare;

  const std::vector<ComposePart> parts{{&config, ""}, {&gadget, prefix}};
  std::vector<EdgeIdentification> ids;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& tri = config.triangles()[*config.triangle_index(targets[k])];
    for (int i = 0; i < 3; ++i) ids.push_back({{0, tri.edges[i]}, {1, mtt.ends[k][i]}});
  }
  return compose(parts, ids);
}

TriangularConfiguration remove_triangles(const TriangularConfiguration& config,
                                         const std::vector<Id>& triangles) {
  const std::set<Id> drop(triangles.begin(), triangles.end());
  std::vector<TriangleSpec> keep;
  for (const auto& t : config.triangles())
    if (!drop.count(t.id)) keep.push_back(t);
  return TriangularConfiguration(config.vertices(), config.edges(), std::move(keep));
}

Matching ReductionResult::forward(const Matching& subset) const {
  std::vector<Id> out;
  for (const auto& b : blocks) {
    const Matching& part = subset.contains(b.source) ? b.m1 : b.m0;
    out.insert(out.end(), part.triangles.begin(), part.triangles.end());
  }
  return Matching::from(std::move(out));
}

ReductionResult tripartite_reduction(const TriangularConfiguration& config,
                                     const Weighting& weighting) {
  require_valid(config);
  static const Gadget mtt = make_matching_triangular_triangle();

  const std::vector<ComposePart> copies{{&config, "1:"}, {&config, "2:"}, {&config, "3:"}};
  TriangularConfiguration current = compose(copies, {});

  ReductionResult out;
  for (const auto& t : config.triangles()) {
    const std::string prefix = "T(" + t.id + ").";
    current = link_by_mtt(current, "1:" + t.id, "2:" + t.id, "3:" + t.id, prefix);
    current = remove_triangles(current, {"1:" + t.id, "2:" + t.id, "3:" + t.id});

    ReductionBlock block{t.id, prefix, {}, with_prefix(mtt.named.at("M1"), prefix),
                         with_prefix(mtt.named.at("M0"), prefix)};
    block.designated = block.m1.triangles.front();
    for (const auto& gt : mtt.config.triangles()) out.weighting.weights[prefix + gt.id] = 0;
    out.weighting.weights[block.designated] = weighting.of(t.id);
    out.blocks.push_back(std::move(block));
  }

  // Copy i's edges go to class i; gadget-internal edges keep the gadget's
  // certified classes (its end k sits in class k+1, matching copy k+1).
  for (const auto& e : current.edges()) {
    int c = 0;
    if (e.id.size() > 2 && e.id[1] == ':' && e.id[0] >= '1' && e.id[0] <= '3') {
      c = e.id[0] - '0';
    } else {
      for (const auto& b : out.blocks) {
        if (e.id.rfind(b.prefix, 0) == 0) {
          c = mtt.tripartition.of(e.id.substr(b.prefix.size()));
          break;
        }
      }
    }
    if (c == 0) throw InternalError("reduction: edge '" + e.id + "' has no class");
    out.tripartition.classes[e.id] = c;
  }
  out.config = std::move(current);
  if (!is_edge_tripartition(out.config, out.tripartition))
    throw InternalError("reduction produced an invalid tripartition");
  return out;
}

}  // namespace kas3
