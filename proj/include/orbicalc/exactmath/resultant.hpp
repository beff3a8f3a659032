#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orbicalc/exactmath/polynomial.hpp"

namespace orbicalc::exactmath {

/// Sylvester matrix of f (degree p) and g (degree q): q shifted rows of f's
/// coefficients followed by p shifted rows of g's, highest degree first.
template <class R>
std::vector<std::vector<R>> sylvester_matrix(const Polynomial<R>& f, const Polynomial<R>& g) {
  const int p = f.degree();
  const int q = g.degree();
  const auto n = static_cast<std::size_t>(p + q);
  std::vector<std::vector<R>> m(n, std::vector<R>(n));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j <= p; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coefficient(p - j);
  }
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= q; ++j) {
      m[static_cast<std::size_t>(q + i)][static_cast<std::size_t>(i + j)] = g.coefficient(q - j);
    }
  }
  return m;
}

/// Determinant by fraction-free (Bareiss) elimination over an integral
/// domain. `exact_div(a, b)` must return a / b when b divides a.
template <class R, class ExactDiv>
R bareiss_determinant(std::vector<std::vector<R>> m, ExactDiv exact_div) {
  const std::size_t n = m.size();
  if (n == 0) return R{1};
  bool negate = false;
  R prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == R{}) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == R{}) ++pivot;
      if (pivot == n) return R{};
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = R{};
    }
    prev = m[k][k];
  }
  return negate ? R{} - m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Res(f, g) as the determinant of the Sylvester matrix. Zero if either
/// polynomial is zero.
template <class R, class ExactDiv>
R resultant(const Polynomial<R>& f, const Polynomial<R>& g, ExactDiv exact_div) {
  if (f.is_zero() || g.is_zero()) return R{};
  return bareiss_determinant(sylvester_matrix(f, g), exact_div);
}

}  // namespace orbicalc::exactmath
