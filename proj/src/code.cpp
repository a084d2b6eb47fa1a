#include "kas3/code.hpp"

#include "kas3/error.hpp"

#include <map>

namespace kas3 {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

struct Echelon {
  GFMatrix rows;                   // reduced rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon reduce(GFMatrix a, std::uint32_t p, std::size_t columns) {
  for (auto& row : a) {
    if (row.size() != columns) throw PreconditionError("GF(p) matrix has ragged rows");
    for (auto& x : row) x %= p;
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < a.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[r], a[pivot]);
    const std::uint64_t inv = inverse_mod(a[r][c], p);
    for (auto& x : a[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t j = 0; j < columns; ++j)
        a[i][j] = static_cast<std::uint32_t>((a[i][j] + (p - f) * a[r][j]) % p);
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<GFVector> gf_p_nullspace(const GFMatrix& a, std::uint32_t p, std::size_t columns) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const Echelon ech = reduce(a, p, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<GFVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    GFVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivots[r]] = (p - ech.rows[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t gf_p_rank(const GFMatrix& a, std::uint32_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const std::size_t columns = a.empty() ? 0 : a.front().size();
  return reduce(a, p, columns).rows.size();
}

BinaryCode::BinaryCode(std::size_t length, std::vector<std::vector<std::uint8_t>> generator)
    : length_(length), generator_(std::move(generator)) {
  GFMatrix m;
  for (const auto& row : generator_) {
    if (row.size() != length_)
      throw PreconditionError("generator row has length " + std::to_string(row.size()) +
                              ", expected " + std::to_string(length_));
    GFVector r;
    for (auto x : row) {
      if (x > 1) throw PreconditionError("generator entries must be 0 or 1");
      r.push_back(x);
    }
    m.push_back(std::move(r));
  }
  if (!m.empty() && gf_p_rank(m, 2) != m.size())
    throw PreconditionError("generator rows are linearly dependent");
}

Polynomial span_weight_enumerator(const std::vector<GFVector>& basis, std::uint32_t p,
                                  std::size_t length) {
  const std::size_t d = basis.size();
  if (d > kMaxEnumeratedDimension)
    throw GuardExceeded("dimension " + std::to_string(d) + " exceeds the enumeration guard of " +
                        std::to_string(kMaxEnumeratedDimension));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= p;
    if (total > (std::uint64_t{1} << kMaxEnumeratedDimension))
      throw GuardExceeded("p^d exceeds 2^24 vectors");
  }

  // Odometer over coefficient tuples. Every step adds exactly one basis
  // vector: bumping digit i adds b_i, and wrapping p-1 -> 0 adds it once more
  // (p * b_i = 0).
  std::vector<std::uint64_t> counts(length + 1, 0);
  GFVector current(length, 0);
  std::vector<std::uint32_t> digits(d, 0);
  std::size_t weight = 0;
  auto add = [&](const GFVector& b) {
    for (std::size_t j = 0; j < length; ++j) {
      if (b[j] == 0) continue;
      const std::uint32_t before = current[j];
      current[j] = (current[j] + b[j]) % p;
      weight += (current[j] != 0) - (before != 0);
    }
  };
  for (std::uint64_t step = 0; step < total; ++step) {
    ++counts[weight];
    for (std::size_t i = 0; i < d; ++i) {
      add(basis[i]);
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  Polynomial out;
  for (std::size_t w = 0; w <= length; ++w)
    if (counts[w]) out.add_term(static_cast<std::int64_t>(w), Integer(counts[w]));
  return out;
}

Polynomial weight_enumerator(const BinaryCode& code) {
  if (code.dimension() > kMaxEnumeratedDimension)
    throw GuardExceeded("code dimension " + std::to_string(code.dimension()) +
                        " exceeds the enumeration guard of " +
                        std::to_string(kMaxEnumeratedDimension));
  std::vector<GFVector> basis;
  for (const auto& row : code.generator()) basis.emplace_back(row.begin(), row.end());
  return span_weight_enumerator(basis, 2, code.length());
}

Polynomial fold_enumerator(const Polynomial& p, std::int64_t e) {
  if (e < 1) throw PreconditionError("fold modulus must be a positive integer");
  Polynomial out;
  for (const auto& [i, a] : p.terms()) {
    const std::int64_t residue = i % e;
    if (residue % 2 != 0)
      throw PreconditionError("exponent " + std::to_string(i) + " has odd residue " +
                              std::to_string(residue) + " modulo " + std::to_string(e));
    out.add_term(residue / 2, a);
  }
  return out;
}

}  // namespace kas3
