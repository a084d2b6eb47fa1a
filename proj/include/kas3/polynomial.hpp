#pragma once

#include "kas3/number.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace kas3 {

/// Sparse univariate polynomial with non-negative integer exponents and
/// big-integer coefficients. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<std::int64_t, Integer>;

  Polynomial() = default;
  explicit Polynomial(const Integer& constant);
  explicit Polynomial(int constant) : Polynomial(Integer(constant)) {}

  /// coeff * x^exponent. Throws PreconditionError on a negative exponent.
  static Polynomial monomial(std::int64_t exponent, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(std::int64_t exponent) const;
  /// Highest stored exponent; -1 for the zero polynomial.
  std::int64_t degree() const;

  /// Adds coeff * x^exponent in place.
  void add_term(std::int64_t exponent, const Integer& coeff);

  Integer evaluate(const Integer& x) const;
  /// Sum of all coefficients, i.e. the value at x = 1.
  Integer coefficient_sum() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  Terms terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Text form `c0 + c1*x^e1 + ...`, ascending exponents. A unit coefficient is
/// omitted on non-constant terms (`x^3`), negative terms render as `- c*x^e`,
/// and the zero polynomial renders as `0`.
std::string to_string(const Polynomial& p);

/// Accepts the output of to_string plus the obvious relaxations (`x`, `3x^2`,
/// `2*x`, arbitrary whitespace, repeated exponents). Throws SchemaError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace kas3
