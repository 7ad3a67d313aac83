#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ffsqfree {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Sylvester matrix of f and g with formal degrees f.size()-1 and g.size()-1.
///
/// Coefficients are given from degree 0 upward; leading entries may be zero,
/// in which case the determinant is the resultant taken at the formal degrees.
/// Rows hold descending coefficients, f-rows first.
template <class T>
Matrix<T> sylvester_matrix(std::span<const T> f, std::span<const T> g, const T& zero) {
  const std::size_t m = f.size() - 1;
  const std::size_t k = g.size() - 1;
  const std::size_t size = m + k;
  Matrix<T> s(size, std::vector<T>(size, zero));
  for (std::size_t row = 0; row < k; ++row)
    for (std::size_t i = 0; i <= m; ++i) s[row][row + i] = f[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t i = 0; i <= k; ++i) s[k + row][row + i] = g[k - i];
  return s;
}

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// `Ring` supplies zero(), one(), is_zero(a), mul(a, b), sub(a, b), neg(a)
/// and exact_div(a, b); every division performed here is exact.
template <class T, class Ring>
T bareiss_determinant(Matrix<T> m, const Ring& ring) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  T prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t swap = k + 1;
      while (swap < n && ring.is_zero(m[swap][k])) ++swap;
      if (swap == n) return ring.zero();
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = ring.is_zero(m[i][k]);
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = ring.mul(m[i][j], m[k][k]);
        if (!lead_zero) v = ring.sub(v, ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.is_zero(v) ? std::move(v) : ring.exact_div(v, prev);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  T det = std::move(m[n - 1][n - 1]);
  return negate ? ring.neg(det) : det;
}

}  // namespace ffsqfree
