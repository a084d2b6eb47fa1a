#pragma once

#include "kas3/matrix.hpp"
#include "kas3/tensor3.hpp"

#include <string>

namespace kas3 {

/// Three r x n matrices of equal shape with r <= n.
template <class T>
struct RectMatrixTriple {
  Matrix<T> a1, a2, a3;

  std::size_t r() const { return a1.rows(); }
  std::size_t n() const { return a1.cols(); }

  void require_valid() const {
    if (a2.rows() != r() || a3.rows() != r() || a2.cols() != n() || a3.cols() != n())
      throw PreconditionError("matrix triple shapes differ");
    if (r() > n()) throw PreconditionError("matrix triple needs r <= n");
  }
};

/// C(i1,i2,i3) = sum_j a1(i1,j) a2(i2,j) a3(i3,j).
template <class T>
Tensor3<T> binet_cauchy_C(const RectMatrixTriple<T>& m) {
  m.require_valid();
  Tensor3<T> c = Tensor3<T>::cube(m.r());
  for (std::size_t i1 = 0; i1 < m.r(); ++i1)
    for (std::size_t i2 = 0; i2 < m.r(); ++i2)
      for (std::size_t i3 = 0; i3 < m.r(); ++i3) {
        T sum(0);
        for (std::size_t j = 0; j < m.n(); ++j) sum += m.a1(i1, j) * m.a2(i2, j) * m.a3(i3, j);
        c.set(i1, i2, i3, std::move(sum));
      }
  return c;
}

inline constexpr std::uint64_t kMaxBinetCauchySubsets = 100000;

/// Sum over r-subsets I of the columns of Per(a1_I) det(a2_I) det(a3_I).
/// Throws GuardExceeded when C(n, r) exceeds 10^5.
template <class T>
T binet_cauchy_rhs(const RectMatrixTriple<T>& m) {
  m.require_valid();
  const std::size_t r = m.r(), n = m.n();
  std::uint64_t subsets = 1;
  for (std::size_t i = 0; i < r; ++i) {
    subsets = subsets * (n - i) / (i + 1);
    if (subsets > kMaxBinetCauchySubsets)
      throw GuardExceeded("binet_cauchy_rhs: more than " + std::to_string(kMaxBinetCauchySubsets) +
                          " column subsets");
  }
  std::vector<std::size_t> cols(r);
  for (std::size_t i = 0; i < r; ++i) cols[i] = i;
  T total(0);
  for (;;) {
    const T d2 = determinant2(m.a2.columns(cols));
    if (!is_zero(d2)) {
      const T d3 = determinant2(m.a3.columns(cols));
      if (!is_zero(d3)) total += permanent2(m.a1.columns(cols)) * d2 * d3;
    }
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t k = i; k < r; ++k) cols[k] = cols[k - 1] + 1;
  }
  return total;
}

}  // namespace kas3
