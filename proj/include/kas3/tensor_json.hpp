#pragma once

#include "kas3/code.hpp"
#include "kas3/config_json.hpp"
#include "kas3/matrix.hpp"
#include "kas3/tensor3.hpp"

#include <variant>

namespace kas3 {

/// Integers as JSON numbers when they fit in int64, else decimal strings;
/// rationals as "p/q" strings; polynomials as {"poly":{"exp":coeff}}.
Json value_to_json(const Integer& v);
Json value_to_json(const Rational& v);
Json value_to_json(const Polynomial& v);

Integer integer_from_json(const Json& j, const std::string& where);

/// Tensor file: {"dims":[n1,n2,n3], "entries":[[i,j,k,value]...]}, 0-based.
/// The ring is the narrowest one holding every value: Integer, then Rational
/// ("p/q" strings), then Polynomial (any {"poly":..} value; rationals are
/// not allowed alongside polynomials).
using AnyTensor = std::variant<Tensor3<Integer>, Tensor3<Rational>, Tensor3<Polynomial>>;

AnyTensor tensor_from_json(const Json& j);
AnyTensor parse_tensor(const std::string& text);

template <class T>
Json tensor_to_json(const Tensor3<T>& a) {
  Json j = Json::object();
  j["dims"] = Json::array({a.dims()[0], a.dims()[1], a.dims()[2]});
  j["entries"] = Json::array();
  for (const auto& [idx, v] : a.entries())
    j["entries"].push_back(Json::array({idx[0], idx[1], idx[2], value_to_json(v)}));
  return j;
}

/// Matrix file: {"n":int, "rows":[[..]..]} with integer entries (numbers or
/// decimal strings).
Matrix<Integer> matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix<Integer>& m);

Json signing_to_json(const EdgeSigning& s);

/// Code file: {"k":int, "n":int, "rows":[[0/1..]..]} with k rows of length n.
BinaryCode code_from_json(const Json& j);

}  // namespace kas3
