#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kas3 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ring helpers shared by every exact value type (Integer, Rational,
// Polynomial). Polynomial provides its own overloads in polynomial.hpp.

inline bool is_zero(const Integer& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return v.is_zero(); }

template <class T>
T ring_one() {
  return T(1);
}

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Parses an optionally signed decimal integer; throws SchemaError.
Integer parse_integer(std::string_view text);

/// Parses "p" or "p/q"; throws SchemaError.
Rational parse_rational(std::string_view text);

}  // namespace kas3
