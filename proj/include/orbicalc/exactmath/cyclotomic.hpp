#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbicalc/exactmath/polynomial.hpp"
#include "orbicalc/exactmath/rational.hpp"

namespace orbicalc::exactmath {

using IntegerPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by Phi_d for
/// every proper divisor d of m. Requires m >= 1.
IntegerPolynomial cyclotomic_polynomial(unsigned m);

namespace detail {
struct CyclotomicModulus;
}

/// Exact element of Q(zeta_m), stored as a polynomial in zeta_m of degree
/// < phi(m), reduced modulo Phi_m.
///
/// Elements of different orders may be mixed freely: both operands are lifted
/// into Q(zeta_lcm) first, using zeta_m = zeta_N^(N/m). Rationals are
/// elements of order 1.
class CyclotomicElement {
 public:
  CyclotomicElement();
  CyclotomicElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  CyclotomicElement(T value) : CyclotomicElement(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// zeta_m^k for any integer k.
  static CyclotomicElement zeta(unsigned m, std::int64_t k = 1);

  /// Element sum_i coefficients[i] * zeta_m^i; any length, reduced on entry.
  static CyclotomicElement from_power_basis(unsigned m, std::vector<Rational> coefficients);

  unsigned order() const;
  /// phi(order()) coefficients in the power basis 1, zeta, ..., zeta^(phi-1).
  std::span<const Rational> coefficients() const { return c_; }

  /// The same element viewed in Q(zeta_n); requires order() | n.
  CyclotomicElement lifted(unsigned n) const;

  bool is_zero() const;
  bool is_rational() const;

  /// The constant term, provided every other coefficient vanishes. Throws
  /// NotRational otherwise.
  Rational rational_part() const;

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_m. Throws ZeroInverse on zero.
  CyclotomicElement inverse() const;

  /// Human readable, e.g. "2/3 + 1/3*zeta(3)".
  std::string str() const;

  CyclotomicElement operator-() const;
  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);
  CyclotomicElement& operator/=(const CyclotomicElement& rhs) { return *this *= rhs.inverse(); }

  friend CyclotomicElement operator+(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs += rhs; }
  friend CyclotomicElement operator-(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs -= rhs; }
  friend CyclotomicElement operator*(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs *= rhs; }
  friend CyclotomicElement operator/(CyclotomicElement lhs, const CyclotomicElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs);

 private:
  CyclotomicElement(const detail::CyclotomicModulus* modulus, std::vector<Rational> c);

  const detail::CyclotomicModulus* modulus_;
  std::vector<Rational> c_;
};

CyclotomicElement cyc_invert(const CyclotomicElement& e);
Rational rational_part(const CyclotomicElement& e);

}  // namespace orbicalc::exactmath
