#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hilbert/rat.hpp"

namespace hilbert {

template <class R>
using Matrix = std::vector<std::vector<R>>;

inline bool is_zero(const Rat& x) { return x == 0; }
inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }

/// Determinant by fraction-free (Bareiss) elimination. R needs ring
/// arithmetic plus `is_zero(R)` and an `exact_quotient(R, R)` found by ADL or
/// in this namespace; every division performed is exact.
template <class R>
R bareiss_determinant(Matrix<R> m, const R& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return one - one;
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(cross, prev);
      }
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Basis of the right kernel {x : m x = 0} of a rational matrix with `cols`
/// columns. Rows are scaled to integers and reduced by fraction-free
/// elimination; the basis has one vector per free column, with a 1 there.
std::vector<std::vector<Rat>> nullspace(const Matrix<Rat>& m, std::size_t cols);

}  // namespace hilbert
