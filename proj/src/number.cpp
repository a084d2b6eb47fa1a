#include "kas3/number.hpp"

#include "kas3/error.hpp"

#include <cctype>

namespace kas3 {

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(pos, end - pos);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw SchemaError("expected an integer, got '" + std::string(text) + "'");
  Integer value = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw SchemaError("expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den.is_zero()) throw SchemaError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace kas3
