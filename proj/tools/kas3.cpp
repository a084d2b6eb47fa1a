#include "kas3/binet_cauchy.hpp"
#include "kas3/code.hpp"
#include "kas3/config_json.hpp"
#include "kas3/cycle_space.hpp"
#include "kas3/error.hpp"
#include "kas3/gadgets.hpp"
#include "kas3/kasteleyn.hpp"
#include "kas3/lattice.hpp"
#include "kas3/matching.hpp"
#include "kas3/tensor_json.hpp"
#include "kas3/tripartition.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace kas3;

namespace {

struct Output {
  Json payload;
  std::string text;
};

struct Globals {
  bool json = false;
  unsigned threads = 1;
  std::string out;
};

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": invalid JSON: " + e.what());
  }
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

Json poly_json(const Polynomial& p) {
  Json j = Json::object();
  j["poly"] = value_to_json(p)["poly"];
  j["text"] = to_string(p);
  return j;
}

std::string join(const std::vector<Id>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
  return s;
}

Output run_gadget(const std::string& kind, bool certify_again) {
  Gadget g = kind == "tunnel" ? make_tunnel() : kind == "s5" ? make_s5() : make_matching_triangular_triangle();
  Output o;
  o.payload = Json::object();
  o.payload["kind"] = to_string(g.kind);
  o.payload["gadget"] = gadget_to_json(g);
  Json named = Json::object();
  for (const auto& [name, m] : g.named) named[name] = m.triangles;
  o.payload["named"] = std::move(named);

  std::ostringstream os;
  os << "gadget " << to_string(g.kind) << ": " << g.config.triangle_count() << " triangles, "
     << g.config.edge_count() << " edges, " << g.ends.size() << " ends\n";
  for (const auto& [name, m] : g.named) os << name << " = {" << join(m.triangles) << "}\n";
  if (certify_again) {
    const Certificate c = certify(g);
    o.payload["certificate"] = certificate_to_json(c);
    o.payload["passed"] = c.passed();
    for (const auto& check : c.checks)
      os << pass_fail(check.passed) << ' ' << check.name << ": " << check.detail << '\n';
    if (!c.passed()) throw InternalError("gadget " + kind + " failed certification");
  }
  o.text = os.str();
  return o;
}

Output run_reduce(const std::string& path, bool check, unsigned threads) {
  const ConfigDocument doc = config_document_from_json(parse_json_file(path));
  const Weighting w = doc.weights.value_or(Weighting{});
  const ReductionResult r = tripartite_reduction(doc.config, w);
  Output o;
  o.payload = to_json(ConfigDocument{r.config, r.weighting, r.tripartition, std::nullopt, std::nullopt});
  const auto sizes = r.tripartition.members();
  std::ostringstream os;
  os << "reduced: " << r.config.triangle_count() << " triangles, " << r.config.edge_count()
     << " edges, classes (" << sizes[0].size() << "," << sizes[1].size() << "," << sizes[2].size()
     << ")\n";
  if (check) {
    const Polynomial before = perfect_matching_polynomial(doc.config, w, threads);
    const Polynomial after = perfect_matching_polynomial(r.config, r.weighting, threads);
    os << "P(input) = " << to_string(before) << "\nP(reduced) = " << to_string(after) << '\n';
    if (before != after) throw InternalError("reduction changed the perfect matching polynomial");
  }
  o.text = os.str();
  return o;
}

template <class T>
Output scalar_output(const T& value) {
  Output o;
  o.payload = Json::object();
  o.payload["value"] = value_to_json(value);
  o.text = to_string(value) + "\n";
  return o;
}

Output run_tensor_scalar(const std::string& path, bool signed_sum, unsigned threads) {
  const AnyTensor a = tensor_from_json(parse_json_file(path));
  return std::visit(
      [&](const auto& t) {
        return scalar_output(signed_sum ? determinant3(t, threads) : permanent3(t, threads));
      },
      a);
}

Output run_triadj(const std::string& path) {
  const ConfigDocument doc = config_document_from_json(parse_json_file(path));
  std::optional<EdgeTripartition> parts = doc.edge_classes;
  if (!parts) parts = find_edge_tripartition(doc.config, {});
  if (!parts) throw PreconditionError("configuration is not edge-tripartite");
  const auto a = triadjacency(doc.config, *parts, doc.weights.value_or(Weighting{}));
  Output o{tensor_to_json(a), ""};
  o.text = "triadjacency " + std::to_string(a.dims()[0]) + "x" + std::to_string(a.dims()[1]) + "x" +
           std::to_string(a.dims()[2]) + ", " + std::to_string(a.nonzero_count()) +
           " nonzero entries\n";
  return o;
}

Output run_kasteleyn(const std::string& path, bool certify_flag, unsigned threads) {
  const Matrix<Integer> m = matrix_from_json(parse_json_file(path));
  const auto tc = build_T(m);
  Output o;
  o.payload = Json::object();
  o.payload["n"] = m.rows();
  o.payload["edges"] = tc.skeleton.graph.edges.size();
  o.payload["m"] = tc.m();
  o.payload["config"] =
      to_json(ConfigDocument{tc.config(), std::nullopt, std::nullopt, tc.skeleton.classes, std::nullopt});
  o.payload["tensor"] = tensor_to_json(tc.tensor);
  std::ostringstream os;
  os << "T(G): n=" << m.rows() << " |E|=" << tc.skeleton.graph.edges.size() << " m=" << tc.m()
     << ", " << tc.config().triangle_count() << " triangles\n";
  if (certify_flag) {
    const Integer per2 = permanent2(m);
    const Integer per3 = permanent3(tc.tensor, threads);
    const Integer det3 = determinant3(tc.tensor, threads);
    const SigningReport signing = certify_trivial_signing(tc);
    const CheckReport bijection = strong_matching_bijection_check(tc, threads);
    const CheckReport g1 = g1_structure_check(tc);
    const bool bound = tc.m() == 2 * m.rows() + tc.skeleton.graph.edges.size() &&
                       tc.m() <= m.rows() * m.rows() + 2 * m.rows();
    Json c = Json::object();
    c["per2"] = value_to_json(per2);
    c["per3"] = value_to_json(per3);
    c["det3"] = value_to_json(det3);
    c["values_agree"] = per2 == per3 && per3 == det3;
    c["size_bound"] = bound;
    c["trivial_signing"] = {{"passed", signing.passed}, {"contributing", signing.contributing}};
    if (signing.witness)
      c["trivial_signing"]["witness"] = {{"sigma1", signing.witness->first},
                                         {"sigma2", signing.witness->second}};
    c["bijection"] = {{"passed", bijection.passed}, {"detail", bijection.detail}};
    c["g1_structure"] = {{"passed", g1.passed}, {"detail", g1.detail}};
    o.payload["certification"] = std::move(c);
    os << "per2 = " << per2 << "\nper3 = " << per3 << "\ndet3 = " << det3 << '\n'
       << pass_fail(per2 == per3 && per3 == det3) << " values agree\n"
       << pass_fail(bound) << " m = 2n+|E| <= n^2+2n\n"
       << pass_fail(signing.passed) << " trivial signing: " << signing.contributing
       << " contributing pair(s)\n"
       << pass_fail(bijection.passed) << " strong matching bijection: " << bijection.detail << '\n'
       << pass_fail(g1.passed) << " G1 structure: " << g1.detail << '\n';
    if (!(per2 == per3 && per3 == det3 && bound && signing.passed && bijection.passed && g1.passed))
      throw InternalError("T(G) certification failed");
  }
  o.text = os.str();
  return o;
}

Output run_sign_k1(const std::string& path, unsigned threads) {
  const AnyTensor a = tensor_from_json(parse_json_file(path));
  return std::visit(
      [&](const auto& t) {
        Output o;
        o.payload = Json::object();
        const auto r = kasteleyn_sign_via_k1(t, threads);
        o.payload["certified"] = r.has_value();
        if (!r) {
          o.text = "not certified (no signing pair found; this does not show A is non-Kasteleyn)\n";
          return o;
        }
        o.payload["permanent"] = value_to_json(r->permanent);
        o.payload["determinant"] = value_to_json(r->determinant);
        o.payload["s1"] = signing_to_json(r->s1);
        o.payload["s2"] = signing_to_json(r->s2);
        o.payload["tensor"] = tensor_to_json(r->signed_tensor);
        o.text = "certified: det(A') = Per(A) = " + to_string(r->permanent) + "\n";
        return o;
      },
      a);
}

Output run_lattice(int a, int b, int c, bool dimers, const std::string& off_path, unsigned threads) {
  const CubicLattice q = cubic_lattice(a, b, c);
  Output o;
  o.payload = Json::object();
  o.payload["dims"] = Json::array({a, b, c});
  o.payload["vertices"] = q.vertex_count();
  o.payload["edges"] = q.edge_count();
  std::ostringstream os;
  if (dimers) {
    const DimerResult d = dimer_polynomial(q, {}, threads);
    if (!d.agree()) throw InternalError("dimer pipelines disagree");
    o.payload["dimers"] = {{"count", value_to_json(d.count())},
                           {"polynomial", poly_json(d.direct)},
                           {"odd_vertex_count", d.odd_vertex_count},
                           {"pipelines_agree", true}};
    os << d.count() << '\n';
  }
  if (!off_path.empty()) {
    const EmbeddedComplex ec = embed_T(q);
    std::ofstream f(off_path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write '" + off_path + "'");
    f << to_off(ec);
    o.payload["off"] = {{"path", off_path},
                        {"vertices", ec.config().vertex_count()},
                        {"triangles", ec.config().triangle_count()}};
    os << "wrote " << off_path << " (" << ec.config().vertex_count() << " vertices, "
       << ec.config().triangle_count() << " triangles)\n";
  }
  if (!dimers && off_path.empty())
    os << "lattice " << a << "x" << b << "x" << c << ": " << q.vertex_count() << " vertices, "
       << q.edge_count() << " edges\n";
  o.text = os.str();
  return o;
}

Output poly_output(const Polynomial& p, Json extra) {
  Output o{std::move(extra), to_string(p) + "\n"};
  o.payload["enumerator"] = poly_json(p);
  return o;
}

Output run_bc_check(int r, int n, std::uint64_t seed, int trials, unsigned threads) {
  if (r < 0 || n < 0 || r > n) throw PreconditionError("bc-check needs 0 <= r <= n");
  if (trials < 1) throw PreconditionError("bc-check needs at least one trial");
  std::mt19937_64 rng(seed);
  auto draw = [&] { return Integer(static_cast<int>(rng() % 7) - 3); };
  Json cases = Json::array();
  int agree = 0;
  for (int t = 0; t < trials; ++t) {
    RectMatrixTriple<Integer> m{Matrix<Integer>(r, n), Matrix<Integer>(r, n), Matrix<Integer>(r, n)};
    for (auto* a : {&m.a1, &m.a2, &m.a3})
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) (*a)(i, j) = draw();
    const Integer lhs = determinant3(binet_cauchy_C(m), threads);
    const Integer rhs = binet_cauchy_rhs(m);
    agree += lhs == rhs;
    cases.push_back({{"lhs", value_to_json(lhs)}, {"rhs", value_to_json(rhs)}});
  }
  Output o;
  o.payload = {{"r", r}, {"n", n}, {"seed", seed}, {"trials", trials}, {"agree", agree},
               {"cases", std::move(cases)}};
  o.text = "bc-check r=" + std::to_string(r) + " n=" + std::to_string(n) +
           " seed=" + std::to_string(seed) + ": " + std::to_string(agree) + "/" +
           std::to_string(trials) + " trials agree\n";
  if (agree != trials) throw InternalError("Binet-Cauchy identity failed on a trial");
  return o;
}

unsigned default_threads() {
  if (const char* env = std::getenv("KAS3_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void print_error(const std::string& kind, const std::string& message) {
  Json j = {{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangular configurations, 3-matrix permanents and Kasteleyn constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.threads = default_threads();
  app.add_flag("--json", g.json, "Print the JSON payload instead of the text summary");
  app.add_option("--threads", g.threads, "Worker threads (default: $KAS3_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Also write the JSON payload to this file");

  std::function<Output()> action;

  auto* gadget = app.add_subcommand("gadget", "Build a reference gadget");
  std::string gadget_kind;
  bool gadget_certify = false;
  gadget->add_option("kind", gadget_kind)->required()->check(CLI::IsMember({"tunnel", "s5", "mtt"}));
  gadget->add_flag("--certify", gadget_certify, "Re-run the property suite");
  gadget->callback([&] { action = [&] { return run_gadget(gadget_kind, gadget_certify); }; });

  auto* reduce = app.add_subcommand("reduce", "Tripartite reduction of a configuration");
  std::string reduce_path;
  bool reduce_check = false;
  reduce->add_option("config", reduce_path)->required();
  reduce->add_flag("--check", reduce_check, "Compare perfect matching polynomials");
  reduce->callback([&] { action = [&] { return run_reduce(reduce_path, reduce_check, g.threads); }; });

  auto* pm = app.add_subcommand("pm", "Perfect matching polynomial of a configuration");
  std::string pm_path;
  pm->add_option("config", pm_path)->required();
  pm->callback([&] {
    action = [&] {
      const ConfigDocument doc = config_document_from_json(parse_json_file(pm_path));
      return poly_output(
          perfect_matching_polynomial(doc.config, doc.weights.value_or(Weighting{}), g.threads),
          Json::object());
    };
  });

  auto* per3 = app.add_subcommand("per3", "Permanent of a 3-matrix");
  std::string per3_path;
  per3->add_option("tensor", per3_path)->required();
  per3->callback([&] { action = [&] { return run_tensor_scalar(per3_path, false, g.threads); }; });

  auto* det3 = app.add_subcommand("det3", "Determinant of a 3-matrix");
  std::string det3_path;
  det3->add_option("tensor", det3_path)->required();
  det3->callback([&] { action = [&] { return run_tensor_scalar(det3_path, true, g.threads); }; });

  auto* triadj = app.add_subcommand("triadj", "Triadjacency 3-matrix of a tripartite configuration");
  std::string triadj_path;
  triadj->add_option("config", triadj_path)->required();
  triadj->callback([&] { action = [&] { return run_triadj(triadj_path); }; });

  auto* kasteleyn = app.add_subcommand("kasteleyn", "T(G) construction for a square matrix");
  auto* build = kasteleyn->add_subcommand("build", "Build T(G) and its vertex-adjacency 3-matrix");
  kasteleyn->require_subcommand(1);
  std::string matrix_path;
  bool build_certify = false;
  build->add_option("matrix", matrix_path)->required();
  build->add_flag("--certify", build_certify, "Check values, signing, bijection and G1 structure");
  build->callback([&] { action = [&] { return run_kasteleyn(matrix_path, build_certify, g.threads); }; });

  auto* sign = app.add_subcommand("sign-k1", "Sign a 3-matrix through its projection graphs");
  std::string sign_path;
  sign->add_option("tensor", sign_path)->required();
  sign->callback([&] { action = [&] { return run_sign_k1(sign_path, g.threads); }; });

  auto* lattice = app.add_subcommand("lattice", "Cubic lattice boxes");
  int la = 0, lb = 0, lc = 0;
  bool dimers = false;
  std::string off_path;
  lattice->add_option("a", la)->required();
  lattice->add_option("b", lb)->required();
  lattice->add_option("c", lc)->required();
  lattice->add_flag("--dimers", dimers, "Count perfect matchings through every pipeline");
  lattice->add_option("--export-off", off_path, "Write the embedded T(Q) as OFF");
  lattice->callback([&] { action = [&] { return run_lattice(la, lb, lc, dimers, off_path, g.threads); }; });

  auto* code = app.add_subcommand("code", "Binary linear codes");
  auto* wenum = code->add_subcommand("wenum", "Weight enumerator of a code");
  code->require_subcommand(1);
  std::string code_path;
  wenum->add_option("code", code_path)->required();
  wenum->callback([&] {
    action = [&] {
      const BinaryCode c = code_from_json(parse_json_file(code_path));
      return poly_output(weight_enumerator(c), {{"k", c.dimension()}, {"n", c.length()}});
    };
  });

  auto* fold = app.add_subcommand("fold", "Fold exponents of a polynomial modulo e");
  std::string fold_text;
  std::int64_t fold_e = 0;
  fold->add_option("poly", fold_text)->required();
  fold->add_option("--e", fold_e)->required();
  fold->callback([&] {
    action = [&] {
      const Polynomial p = parse_polynomial(fold_text);
      Output o{Json::object(), ""};
      o.payload["e"] = fold_e;
      o.payload["input"] = poly_json(p);
      const Polynomial r = fold_enumerator(p, fold_e);
      o.payload["result"] = poly_json(r);
      o.text = to_string(r) + "\n";
      return o;
    };
  });

  auto* kernel = app.add_subcommand("kernel-wenum", "Weight enumerator of the GF(p) cycle space");
  std::string kernel_path;
  std::uint32_t kernel_p = 2;
  kernel->add_option("config", kernel_path)->required();
  kernel->add_option("--p", kernel_p)->required();
  kernel->callback([&] {
    action = [&] {
      const ConfigDocument doc = config_document_from_json(parse_json_file(kernel_path));
      return poly_output(cycle_space_weight_enumerator(doc.config, kernel_p), {{"p", kernel_p}});
    };
  });

  auto* bc = app.add_subcommand("bc-check", "Random checks of the Binet-Cauchy identity");
  int bc_r = 0, bc_n = 0, bc_trials = 20;
  std::uint64_t bc_seed = 0;
  bc->add_option("--r", bc_r)->required();
  bc->add_option("--n", bc_n)->required();
  bc->add_option("--seed", bc_seed);
  bc->add_option("--trials", bc_trials);
  bc->callback([&] { action = [&] { return run_bc_check(bc_r, bc_n, bc_seed, bc_trials, g.threads); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("usage", e.what());
    return 2;
  }

  try {
    const Output o = action();
    if (!g.out.empty()) {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) throw PreconditionError("cannot write '" + g.out + "'");
      f << dump_canonical(o.payload);
    }
    std::cout << (g.json ? dump_canonical(o.payload) : o.text);
    return 0;
  } catch (const SchemaError& e) {
    print_error(e.kind(), e.what());
    return 2;
  } catch (const Error& e) {
    print_error(e.kind(), e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    print_error("schema", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
}
