#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbicalc::exactmath {

/// Dense univariate polynomial, coefficients stored lowest degree first and
/// kept trimmed (no trailing zeros). `R{}` must be the additive identity and
/// `==` must decide equality exactly.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<R> coefficients) : c_(std::move(coefficients)) { trim(); }
  template <std::integral T>
  explicit Polynomial(T value) : c_{R(value)} { trim(); }

  static Polynomial constant(R value) { return Polynomial(std::vector<R>{std::move(value)}); }

  static Polynomial monomial(R value, std::size_t exponent) {
    std::vector<R> c(exponent + 1);
    c[exponent] = std::move(value);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  R coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : R{}; }
  const std::vector<R>& coefficients() const { return c_; }
  const R& leading() const { return c_.back(); }

  /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
  int lowest_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!(c_[i] == R{})) return static_cast<int>(i);
    }
    return -1;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<R> c(lhs.c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == R{}) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& lhs, const R& scalar) {
    Polynomial out = lhs;
    for (auto& v : out.c_) v *= scalar;
    out.trim();
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.c_.size() == rhs.c_.size() && std::equal(lhs.c_.begin(), lhs.c_.end(), rhs.c_.begin());
  }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> c(k);
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  /// Substitutes x -> value * x.
  Polynomial scaled_argument(const R& value) const {
    Polynomial out = *this;
    R power = R{1};
    for (auto& v : out.c_) {
      v *= power;
      power *= value;
    }
    out.trim();
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R{}) c_.pop_back();
  }

  std::vector<R> c_;
};

/// Quotient and remainder over a field: `R` must support `/`.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& dividend, const Polynomial<R>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<R> rem = dividend.coefficients();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial<R>{}, dividend};
  std::vector<R> quo(rem.size() - static_cast<std::size_t>(dd));
  const R lead_inv = R{1} / divisor.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == R{}) continue;
    const R q = rem[i] * lead_inv;
    quo[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial<R>(std::move(quo)), Polynomial<R>(std::move(rem))};
}

/// Exact quotient; throws std::domain_error if the division leaves a remainder.
template <class R>
Polynomial<R> divide_exact(const Polynomial<R>& dividend, const Polynomial<R>& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic greatest common divisor over a field.
template <class R>
Polynomial<R> gcd(Polynomial<R> a, Polynomial<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (R{1} / a.leading());
}

}  // namespace orbicalc::exactmath
