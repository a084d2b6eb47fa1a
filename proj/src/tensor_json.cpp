#include "kas3/tensor_json.hpp"

#include "kas3/error.hpp"

#include <limits>

namespace kas3 {

namespace {

struct RawValue {
  enum Kind { kInteger, kRational, kPoly } kind;
  Integer integer;
  Rational rational;
  Polynomial poly;
};

std::int64_t exponent_from_key(const std::string& key) {
  const Integer e = parse_integer(key);
  if (e < 0 || e > std::numeric_limits<std::int32_t>::max())
    throw SchemaError("polynomial exponent '" + key + "' out of range");
  return static_cast<std::int64_t>(e);
}

RawValue raw_value(const Json& j) {
  if (j.is_object()) {
    auto p = j.find("poly");
    if (p == j.end() || j.size() != 1 || !p->is_object())
      throw SchemaError("tensor value objects must be {\"poly\":{exp:coeff}}");
    Polynomial poly;
    for (auto it = p->begin(); it != p->end(); ++it)
      poly.add_term(exponent_from_key(it.key()), integer_from_json(it.value(), "coefficient"));
    return {RawValue::kPoly, 0, 0, std::move(poly)};
  }
  if (j.is_string() && j.get<std::string>().find('/') != std::string::npos)
    return {RawValue::kRational, 0, parse_rational(j.get<std::string>()), {}};
  return {RawValue::kInteger, integer_from_json(j, "tensor value"), 0, {}};
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json value_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

Json value_to_json(const Rational& v) {
  if (denominator(v) == 1) return value_to_json(Integer(numerator(v)));
  return Json(to_string(v));
}

Json value_to_json(const Polynomial& v) {
  Json terms = Json::object();
  for (const auto& [e, c] : v.terms()) terms[std::to_string(e)] = value_to_json(c);
  Json j = Json::object();
  j["poly"] = std::move(terms);
  return j;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw SchemaError(where + " must be an integer or a decimal string");
}

AnyTensor tensor_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("tensor must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "dims" && it.key() != "entries")
      throw SchemaError("unknown tensor key \"" + it.key() + "\"");
  auto jd = j.find("dims");
  auto je = j.find("entries");
  if (jd == j.end() || !jd->is_array() || jd->size() != 3)
    throw SchemaError("tensor \"dims\" must hold three sizes");
  if (je == j.end() || !je->is_array()) throw SchemaError("tensor \"entries\" must be an array");
  const std::array<std::size_t, 3> dims{index_from_json((*jd)[0], "dims"),
                                        index_from_json((*jd)[1], "dims"),
                                        index_from_json((*jd)[2], "dims")};

  std::vector<std::pair<std::array<std::size_t, 3>, RawValue>> raw;
  bool any_rational = false, any_poly = false;
  for (const auto& entry : *je) {
    if (!entry.is_array() || entry.size() != 4)
      throw SchemaError("tensor entries must be [i,j,k,value]");
    std::array<std::size_t, 3> idx{index_from_json(entry[0], "index"),
                                   index_from_json(entry[1], "index"),
                                   index_from_json(entry[2], "index")};
    for (int a = 0; a < 3; ++a)
      if (idx[a] >= dims[a]) throw SchemaError("tensor entry index outside dims");
    RawValue v = raw_value(entry[3]);
    any_rational = any_rational || v.kind == RawValue::kRational;
    any_poly = any_poly || v.kind == RawValue::kPoly;
    raw.emplace_back(idx, std::move(v));
  }
  if (any_poly && any_rational)
    throw SchemaError("tensor mixes polynomial and rational values");

  auto fill = [&](auto tensor, auto convert) {
    for (const auto& [idx, v] : raw) tensor.add(idx[0], idx[1], idx[2], convert(v));
    return tensor;
  };
  if (any_poly)
    return fill(Tensor3<Polynomial>(dims[0], dims[1], dims[2]), [](const RawValue& v) {
      return v.kind == RawValue::kPoly ? v.poly : Polynomial(v.integer);
    });
  if (any_rational)
    return fill(Tensor3<Rational>(dims[0], dims[1], dims[2]), [](const RawValue& v) {
      return v.kind == RawValue::kRational ? v.rational : Rational(v.integer);
    });
  return fill(Tensor3<Integer>(dims[0], dims[1], dims[2]),
              [](const RawValue& v) { return v.integer; });
}

AnyTensor parse_tensor(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return tensor_from_json(j);
}

Matrix<Integer> matrix_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("matrix must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "n" && it.key() != "rows")
      throw SchemaError("unknown matrix key \"" + it.key() + "\"");
  auto jn = j.find("n");
  auto jr = j.find("rows");
  if (jn == j.end()) throw SchemaError("matrix needs \"n\"");
  if (jr == j.end() || !jr->is_array()) throw SchemaError("matrix \"rows\" must be an array");
  const std::size_t n = index_from_json(*jn, "\"n\"");
  if (jr->size() != n) throw SchemaError("matrix must have n rows");
  Matrix<Integer> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = (*jr)[i];
    if (!row.is_array() || row.size() != n) throw SchemaError("matrix rows must have n entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(row[k], "matrix entry");
  }
  return m;
}

Json matrix_to_json(const Matrix<Integer>& m) {
  Json j = Json::object();
  j["n"] = m.rows();
  j["rows"] = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(value_to_json(m(i, k)));
    j["rows"].push_back(std::move(row));
  }
  return j;
}

Json signing_to_json(const EdgeSigning& s) {
  Json out = Json::array();
  for (const auto& [e, v] : s.signs) out.push_back(Json::array({e.first, e.second, v}));
  return out;
}

BinaryCode code_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("code must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "k" && it.key() != "n" && it.key() != "rows")
      throw SchemaError("unknown code key \"" + it.key() + "\"");
  auto jk = j.find("k"), jn = j.find("n"), jr = j.find("rows");
  if (jk == j.end() || jn == j.end() || jr == j.end() || !jr->is_array())
    throw SchemaError("code needs \"k\", \"n\" and \"rows\"");
  const std::size_t k = index_from_json(*jk, "\"k\"");
  const std::size_t n = index_from_json(*jn, "\"n\"");
  if (jr->size() != k) throw SchemaError("code must have k rows");
  std::vector<std::vector<std::uint8_t>> rows;
  for (const auto& row : *jr) {
    if (!row.is_array() || row.size() != n) throw SchemaError("code rows must have n entries");
    std::vector<std::uint8_t> bits;
    for (const auto& b : row) {
      if (!b.is_number_integer() || (b.get<std::int64_t>() != 0 && b.get<std::int64_t>() != 1))
        throw SchemaError("code entries must be 0 or 1");
      bits.push_back(static_cast<std::uint8_t>(b.get<std::int64_t>()));
    }
    rows.push_back(std::move(bits));
  }
  return BinaryCode(n, std::move(rows));
}

}  // namespace kas3
