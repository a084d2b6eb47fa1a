#include "kas3/polynomial.hpp"

#include "kas3/error.hpp"

#include <cctype>
#include <limits>

namespace kas3 {

Polynomial::Polynomial(const Integer& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

Polynomial Polynomial::monomial(std::int64_t exponent, const Integer& coeff) {
  Polynomial p;
  p.add_term(exponent, coeff);
  return p;
}

Integer Polynomial::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first;
}

void Polynomial::add_term(std::int64_t exponent, const Integer& coeff) {
  if (exponent < 0)
    throw PreconditionError("negative exponent " + std::to_string(exponent) +
                            " in polynomial term");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Integer Polynomial::evaluate(const Integer& x) const {
  // Horner over the sparse exponents, highest first.
  Integer acc = 0;
  std::int64_t prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (std::int64_t e = prev; e > it->first; --e) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (std::int64_t e = prev; e > 0; --e) acc *= x;
  return acc;
}

Integer Polynomial::coefficient_sum() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "x^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Integer coeff = 1;
      bool have_coeff = false;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_uint();
        have_coeff = true;
        skip_ws();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::int64_t exponent = 0;
      if (!at_end() && peek() == 'x') {
        ++pos_;
        skip_ws();
        exponent = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected exponent after '^'");
          const Integer e = read_uint();
          if (e > Integer(std::numeric_limits<std::int64_t>::max())) fail("exponent too large");
          exponent = static_cast<std::int64_t>(e);
        }
      } else if (!have_coeff) {
        fail("expected a term");
      }
      result.add_term(exponent, sign < 0 ? Integer(-coeff) : coeff);
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  Integer read_uint() {
    Integer v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw SchemaError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace kas3
