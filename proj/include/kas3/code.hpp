#pragma once

#include "kas3/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace kas3 {

/// Dense matrix over GF(p), entries reduced into [0, p).
using GFMatrix = std::vector<std::vector<std::uint32_t>>;
using GFVector = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t p);

/// Basis of {v : A v = 0} over GF(p), one vector per free column of the
/// reduced row echelon form (pivot columns chosen left to right). Each basis
/// vector has a 1 at its own free column and 0 at every other free column.
/// `columns` gives the width when A has no rows.
std::vector<GFVector> gf_p_nullspace(const GFMatrix& a, std::uint32_t p, std::size_t columns);

std::size_t gf_p_rank(const GFMatrix& a, std::uint32_t p);

/// Binary linear code given by a k x n generator matrix with independent rows.
class BinaryCode {
 public:
  /// Throws PreconditionError on ragged rows, entries other than 0/1, or
  /// dependent rows.
  BinaryCode(std::size_t length, std::vector<std::vector<std::uint8_t>> generator);

  std::size_t length() const { return length_; }
  std::size_t dimension() const { return generator_.size(); }
  const std::vector<std::vector<std::uint8_t>>& generator() const { return generator_; }

 private:
  std::size_t length_;
  std::vector<std::vector<std::uint8_t>> generator_;
};

inline constexpr std::size_t kMaxEnumeratedDimension = 24;

/// Sum over all 2^k codewords of x^{weight}. Throws GuardExceeded for k > 24.
Polynomial weight_enumerator(const BinaryCode& code);

/// Sum over all p^d vectors of the span of `basis` (length n) of x^{weight}.
/// Throws GuardExceeded when d > 24 or p^d > 2^24.
Polynomial span_weight_enumerator(const std::vector<GFVector>& basis, std::uint32_t p,
                                  std::size_t length);

/// Sum of a_i x^{(i mod e)/2}. Throws PreconditionError naming the first
/// exponent with a nonzero coefficient and an odd residue, or when e < 1.
Polynomial fold_enumerator(const Polynomial& p, std::int64_t e);

}  // namespace kas3
