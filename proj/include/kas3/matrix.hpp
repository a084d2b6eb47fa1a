#pragma once

#include "kas3/error.hpp"
#include "kas3/number.hpp"
#include "kas3/polynomial.hpp"

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kas3 {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Submatrix keeping every row and the listed columns, in order.
  Matrix columns(const std::vector<std::size_t>& keep) const {
    Matrix out(rows_, keep.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(i, keep[j]);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline constexpr std::size_t kMaxRyserSide = 20;

/// Permanent by Ryser's formula with Gray-code row sums, O(2^n n).
template <class T>
T permanent2(const Matrix<T>& m) {
  if (!m.is_square()) throw PreconditionError("permanent2 needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n > kMaxRyserSide)
    throw GuardExceeded("permanent2: side " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxRyserSide));
  std::vector<T> row_sums(n, T(0));
  T total(0);
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const std::uint64_t next = step ^ (step >> 1);
    const std::uint64_t flipped = next ^ gray;
    std::size_t col = 0;
    while (!((flipped >> col) & 1)) ++col;
    const bool added = (next >> col) & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += m(i, col);
      else
        row_sums[i] -= m(i, col);
    }
    gray = next;
    T prod(1);
    for (std::size_t i = 0; i < n && !is_zero(prod); ++i) prod *= row_sums[i];
    const int size = __builtin_popcountll(gray);
    if ((n - size) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

/// Sum over permutations of sign^signed * prod m(i, sigma(i)) by dynamic
/// programming over column subsets, O(2^n n). Needs no division.
template <class T>
T permutation_sum_by_subsets(const Matrix<T>& m, bool with_sign) {
  if (!m.is_square()) throw PreconditionError("needs a square matrix");
  const std::size_t n = m.rows();
  if (n > kMaxRyserSide)
    throw GuardExceeded("matrix side " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxRyserSide));
  std::vector<T> f(std::size_t{1} << n, T(0));
  f[0] = T(1);
  for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    if (is_zero(f[mask])) continue;
    const std::size_t row = __builtin_popcountll(mask);
    for (std::size_t c = 0; c < n; ++c) {
      if ((mask >> c) & 1 || is_zero(m(row, c))) continue;
      T term = f[mask] * m(row, c);
      if (with_sign && (__builtin_popcountll(mask >> (c + 1)) & 1))
        f[mask | (std::uint64_t{1} << c)] -= term;
      else
        f[mask | (std::uint64_t{1} << c)] += term;
    }
  }
  return f.back();
}

namespace detail {

inline Integer determinant_bareiss(Matrix<Integer> a) {
  const std::size_t n = a.rows();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Rational determinant_gauss(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant: fraction-free Bareiss elimination over the integers,
/// Gaussian elimination over the rationals, subset expansion otherwise.
template <class T>
T determinant2(const Matrix<T>& m) {
  if (!m.is_square()) throw PreconditionError("determinant2 needs a square matrix");
  if (m.rows() == 0) return T(1);
  if constexpr (std::is_same_v<T, Integer>)
    return detail::determinant_bareiss(m);
  else if constexpr (std::is_same_v<T, Rational>)
    return detail::determinant_gauss(m);
  else
    return permutation_sum_by_subsets(m, true);
}

}  // namespace kas3
