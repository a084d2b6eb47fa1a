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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>

namespace py = pybind11;
using namespace kas3;

namespace {

// Every entry point exchanges canonical JSON text; the Python layer decodes it.

Gadget gadget_by_name(const std::string& kind) {
  if (kind == "tunnel") return make_tunnel();
  if (kind == "s5") return make_s5();
  if (kind == "mtt") return make_matching_triangular_triangle();
  throw PreconditionError("unknown gadget '" + kind + "' (expected tunnel, s5 or mtt)");
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

std::string gadget_json(const std::string& kind, bool recertify) {
  const Gadget g = gadget_by_name(kind);
  Json j = Json::object();
  j["kind"] = to_string(g.kind);
  j["gadget"] = gadget_to_json(g);
  Json named = Json::object();
  for (const auto& [name, m] : g.named) named[name] = m.triangles;
  j["named"] = std::move(named);
  const Certificate c = recertify ? certify(g) : g.certificate;
  j["certificate"] = certificate_to_json(c);
  j["passed"] = c.passed();
  return dump_canonical(j);
}

std::string pm_polynomial(const std::string& config, unsigned threads) {
  const ConfigDocument doc = config_document_from_json(parse_text(config));
  return dump_canonical(
      value_to_json(perfect_matching_polynomial(doc.config, doc.weights.value_or(Weighting{}), threads)));
}

std::string reduce(const std::string& config) {
  const ConfigDocument doc = config_document_from_json(parse_text(config));
  const ReductionResult r = tripartite_reduction(doc.config, doc.weights.value_or(Weighting{}));
  return dump_canonical(
      to_json(ConfigDocument{r.config, r.weighting, r.tripartition, std::nullopt, std::nullopt}));
}

std::string tensor_scalar(const std::string& tensor, bool signed_sum, unsigned threads) {
  const AnyTensor a = tensor_from_json(parse_text(tensor));
  return std::visit(
      [&](const auto& t) {
        return dump_canonical(value_to_json(signed_sum ? determinant3(t, threads) : permanent3(t, threads)));
      },
      a);
}

std::string triadj(const std::string& config) {
  const ConfigDocument doc = config_document_from_json(parse_text(config));
  std::optional<EdgeTripartition> parts = doc.edge_classes;
  if (!parts) parts = find_edge_tripartition(doc.config, {});
  if (!parts) throw PreconditionError("configuration is not edge-tripartite");
  return dump_canonical(tensor_to_json(triadjacency(doc.config, *parts, doc.weights.value_or(Weighting{}))));
}

std::string kasteleyn_build(const std::string& matrix, bool certify_flag, unsigned threads) {
  const Matrix<Integer> m = matrix_from_json(parse_text(matrix));
  const auto tc = build_T(m);
  Json j = Json::object();
  j["n"] = m.rows();
  j["edges"] = tc.skeleton.graph.edges.size();
  j["m"] = tc.m();
  j["config"] =
      to_json(ConfigDocument{tc.config(), std::nullopt, std::nullopt, tc.skeleton.classes, std::nullopt});
  j["tensor"] = tensor_to_json(tc.tensor);
  if (certify_flag) {
    const Integer per2 = permanent2(m);
    const Integer per3 = permanent3(tc.tensor, threads);
    const Integer det3 = determinant3(tc.tensor, threads);
    const SigningReport signing = certify_trivial_signing(tc);
    const CheckReport bijection = strong_matching_bijection_check(tc, threads);
    const CheckReport g1 = g1_structure_check(tc);
    Json c = Json::object();
    c["per2"] = value_to_json(per2);
    c["per3"] = value_to_json(per3);
    c["det3"] = value_to_json(det3);
    c["values_agree"] = per2 == per3 && per3 == det3;
    c["size_bound"] = tc.m() == 2 * m.rows() + tc.skeleton.graph.edges.size() &&
                      tc.m() <= m.rows() * m.rows() + 2 * m.rows();
    c["trivial_signing"] = {{"passed", signing.passed}, {"contributing", signing.contributing}};
    c["bijection"] = {{"passed", bijection.passed}, {"detail", bijection.detail}};
    c["g1_structure"] = {{"passed", g1.passed}, {"detail", g1.detail}};
    j["certification"] = std::move(c);
  }
  return dump_canonical(j);
}

std::string sign_k1(const std::string& tensor, unsigned threads) {
  const AnyTensor a = tensor_from_json(parse_text(tensor));
  return std::visit(
      [&](const auto& t) {
        Json j = Json::object();
        const auto r = kasteleyn_sign_via_k1(t, threads);
        j["certified"] = r.has_value();
        if (r) {
          j["permanent"] = value_to_json(r->permanent);
          j["determinant"] = value_to_json(r->determinant);
          j["s1"] = signing_to_json(r->s1);
          j["s2"] = signing_to_json(r->s2);
          j["tensor"] = tensor_to_json(r->signed_tensor);
        }
        return dump_canonical(j);
      },
      a);
}

std::string dimers(int a, int b, int c, unsigned threads) {
  const DimerResult d = dimer_polynomial(cubic_lattice(a, b, c), {}, threads);
  Json j = {{"count", value_to_json(d.count())},
            {"direct", value_to_json(d.direct)},
            {"tensor", value_to_json(d.tensor)},
            {"ryser", value_to_json(d.ryser)},
            {"agree", d.agree()},
            {"odd_vertex_count", d.odd_vertex_count}};
  return dump_canonical(j);
}

std::string permanent2_json(const std::string& matrix) {
  return dump_canonical(value_to_json(permanent2(matrix_from_json(parse_text(matrix)))));
}

std::string code_wenum(const std::string& code) {
  return dump_canonical(value_to_json(weight_enumerator(code_from_json(parse_text(code)))));
}

std::string fold(const std::string& poly, std::int64_t e) {
  return dump_canonical(value_to_json(fold_enumerator(parse_polynomial(poly), e)));
}

std::string kernel_wenum(const std::string& config, std::uint32_t p) {
  const ConfigDocument doc = config_document_from_json(parse_text(config));
  return dump_canonical(value_to_json(cycle_space_weight_enumerator(doc.config, p)));
}

std::string bc_check(int r, int n, std::uint64_t seed, int trials) {
  if (r < 0 || n < 0 || r > n) throw PreconditionError("bc-check needs 0 <= r <= n");
  std::mt19937_64 rng(seed);
  Json cases = Json::array();
  for (int t = 0; t < trials; ++t) {
    RectMatrixTriple<Integer> m{Matrix<Integer>(r, n), Matrix<Integer>(r, n), Matrix<Integer>(r, n)};
    for (auto* a : {&m.a1, &m.a2, &m.a3})
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) (*a)(i, j) = Integer(static_cast<int>(rng() % 7) - 3);
    cases.push_back({{"lhs", value_to_json(determinant3(binet_cauchy_C(m)))},
                     {"rhs", value_to_json(binet_cauchy_rhs(m))}});
  }
  return dump_canonical(cases);
}

}  // namespace

PYBIND11_MODULE(_kas3, m) {
  m.doc() = "Exact 3-matrix permanents, triangular configurations and Kasteleyn constructions";

  // Translators run newest first, so subclasses are registered after the base.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());
  py::register_exception<InternalError>(m, "InternalError", base.ptr());

  const auto release = py::call_guard<py::gil_scoped_release>();

  m.def("gadget", &gadget_json, py::arg("kind"), py::arg("recertify") = false, release);
  m.def("perfect_matching_polynomial", &pm_polynomial, py::arg("config"), py::arg("threads") = 1, release);
  m.def("tripartite_reduction", &reduce, py::arg("config"), release);
  m.def(
      "permanent3", [](const std::string& t, unsigned threads) { return tensor_scalar(t, false, threads); },
      py::arg("tensor"), py::arg("threads") = 1, release);
  m.def(
      "determinant3", [](const std::string& t, unsigned threads) { return tensor_scalar(t, true, threads); },
      py::arg("tensor"), py::arg("threads") = 1, release);
  m.def("triadjacency", &triadj, py::arg("config"), release);
  m.def("kasteleyn_build", &kasteleyn_build, py::arg("matrix"), py::arg("certify") = false,
        py::arg("threads") = 1, release);
  m.def("sign_k1", &sign_k1, py::arg("tensor"), py::arg("threads") = 1, release);
  m.def("dimers", &dimers, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("threads") = 1, release);
  m.def(
      "lattice_off", [](int a, int b, int c) { return to_off(embed_T(cubic_lattice(a, b, c))); },
      py::arg("a"), py::arg("b"), py::arg("c"), release);
  m.def("permanent2", &permanent2_json, py::arg("matrix"), release);
  m.def("weight_enumerator", &code_wenum, py::arg("code"), release);
  m.def("fold", &fold, py::arg("poly"), py::arg("e"), release);
  m.def("kernel_weight_enumerator", &kernel_wenum, py::arg("config"), py::arg("p"), release);
  m.def("binet_cauchy_check", &bc_check, py::arg("r"), py::arg("n"), py::arg("seed") = 0,
        py::arg("trials") = 20, release);
}
