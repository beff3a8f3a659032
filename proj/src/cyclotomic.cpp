#include "orbicalc/exactmath/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "orbicalc/errors.hpp"

namespace orbicalc::exactmath {

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Phi_m is monic with integer coefficients, so long division by it stays in Z.
IntegerPolynomial divide_by_monic(const IntegerPolynomial& dividend, const IntegerPolynomial& divisor) {
  std::vector<Integer> rem = dividend.coefficients();
  const int dd = divisor.degree();
  std::vector<Integer> quo(rem.size() - static_cast<std::size_t>(dd));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    const Integer q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coefficient(j);
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) throw std::logic_error("x^m - 1 not divisible by cyclotomic factor");
  }
  return IntegerPolynomial(std::move(quo));
}

IntegerPolynomial compute_cyclotomic(unsigned m, std::map<unsigned, IntegerPolynomial>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<Integer> xm1(m + 1);
  xm1[0] = -1;
  xm1[m] = 1;
  IntegerPolynomial quotient(std::move(xm1));
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) quotient = divide_by_monic(quotient, compute_cyclotomic(d, memo));
  }
  memo.emplace(m, quotient);
  return quotient;
}

}  // namespace

IntegerPolynomial cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw ValidationError("cyclotomic polynomial order must be positive");
  std::map<unsigned, IntegerPolynomial> memo;
  return compute_cyclotomic(m, memo);
}

namespace detail {

struct CyclotomicModulus {
  unsigned order;
  unsigned degree;
  // Phi_m coefficients below the leading 1.
  std::vector<Integer> low;
};

namespace {

CyclotomicModulus make_modulus(unsigned m) {
  const IntegerPolynomial phi = cyclotomic_polynomial(m);
  std::vector<Integer> low(phi.coefficients().begin(), phi.coefficients().end() - 1);
  return CyclotomicModulus{m, static_cast<unsigned>(phi.degree()), std::move(low)};
}

}  // namespace

// Moduli are built once per order and never freed, so element handles stay
// valid for the life of the process.
const CyclotomicModulus* modulus_for(unsigned m) {
  static const CyclotomicModulus rationals = make_modulus(1);
  if (m == 1) return &rationals;
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicModulus>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[m];
  if (!slot) slot = std::make_unique<CyclotomicModulus>(make_modulus(m));
  return slot.get();
}

}  // namespace detail

namespace {

using detail::CyclotomicModulus;
using detail::modulus_for;

// In-place reduction of a power-basis vector modulo Phi_m; result has length phi(m).
void reduce(std::vector<Rational>& v, const CyclotomicModulus& mod) {
  const std::size_t deg = mod.degree;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i].is_zero()) continue;
    const Rational top = v[i];
    // x^i = x^(i-deg) * x^deg and x^deg = -sum low[j] x^j.
    for (std::size_t j = 0; j < deg; ++j) {
      if (mod.low[j] != 0) v[i - deg + j] -= top * Rational(mod.low[j]);
    }
  }
  v.resize(deg);
}

RationalPolynomial to_polynomial(std::span<const Rational> c) {
  return RationalPolynomial(std::vector<Rational>(c.begin(), c.end()));
}

RationalPolynomial modulus_polynomial(const CyclotomicModulus& mod) {
  std::vector<Rational> c(mod.low.begin(), mod.low.end());
  c.emplace_back(1);
  return RationalPolynomial(std::move(c));
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

CyclotomicElement::CyclotomicElement() : CyclotomicElement(Rational(0)) {}

CyclotomicElement::CyclotomicElement(const Rational& value)
    : modulus_(modulus_for(1)), c_{value} {}

CyclotomicElement::CyclotomicElement(const CyclotomicModulus* modulus, std::vector<Rational> c)
    : modulus_(modulus), c_(std::move(c)) {}

CyclotomicElement CyclotomicElement::zeta(unsigned m, std::int64_t k) {
  if (m == 0) throw ValidationError("root of unity order must be positive");
  const auto mm = static_cast<std::int64_t>(m);
  const auto e = static_cast<std::size_t>(((k % mm) + mm) % mm);
  std::vector<Rational> v(e + 1);
  v[e] = Rational(1);
  return from_power_basis(m, std::move(v));
}

CyclotomicElement CyclotomicElement::from_power_basis(unsigned m, std::vector<Rational> coefficients) {
  if (m == 0) throw ValidationError("cyclotomic order must be positive");
  const CyclotomicModulus* mod = modulus_for(m);
  if (coefficients.size() < mod->degree) coefficients.resize(mod->degree);
  reduce(coefficients, *mod);
  return CyclotomicElement(mod, std::move(coefficients));
}

unsigned CyclotomicElement::order() const { return modulus_->order; }

CyclotomicElement CyclotomicElement::lifted(unsigned n) const {
  const unsigned m = order();
  if (n == m) return *this;
  if (n == 0 || n % m != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  const unsigned step = n / m;
  std::vector<Rational> v(static_cast<std::size_t>(c_.size() == 0 ? 1 : (c_.size() - 1) * step + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return from_power_basis(n, std::move(v));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& v : c_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

Rational CyclotomicElement::rational_part() const {
  if (!is_rational()) throw NotRational("element " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw ZeroInverse("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (order() <= 2) return CyclotomicElement(modulus_, {c_[0].inverse()});
  // Extended Euclid: track s with s * a == r (mod Phi).
  RationalPolynomial r0 = modulus_polynomial(*modulus_);
  RationalPolynomial r1 = to_polynomial(c_);
  RationalPolynomial s0;
  RationalPolynomial s1 = RationalPolynomial::constant(Rational(1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_m is irreducible, so the last nonzero remainder is a unit constant.
  const Rational unit = r1.leading();
  RationalPolynomial inv = s1 * unit.inverse();
  return from_power_basis(order(), inv.coefficients());
}

std::string CyclotomicElement::str() const {
  if (is_rational()) return rational_part().str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& v = c_[i];
    if (v.is_zero()) continue;
    Rational mag = v;
    if (first) {
      if (v.sign() < 0) {
        os << "-";
        mag = -v;
      }
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
      mag = v.abs();
    }
    first = false;
    if (i == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1)) os << mag.str() << "*";
    os << "zeta(" << order() << ")";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  if (rhs.order() == 1) {
    c_[0] += rhs.c_[0];
    return *this;
  }
  if (order() != rhs.order()) {
    const unsigned n = lcm_order(order(), rhs.order());
    *this = lifted(n);
    return *this += rhs.lifted(n);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) { return *this += -rhs; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  if (rhs.order() == 1) {
    for (auto& v : c_) v *= rhs.c_[0];
    return *this;
  }
  if (order() == 1) {
    const Rational scalar = c_[0];
    *this = rhs;
    for (auto& v : c_) v *= scalar;
    return *this;
  }
  if (order() != rhs.order()) {
    const unsigned n = lcm_order(order(), rhs.order());
    *this = lifted(n);
    return *this *= rhs.lifted(n);
  }
  const std::size_t d = c_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!rhs.c_[j].is_zero()) prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  reduce(prod, *modulus_);
  c_ = std::move(prod);
  return *this;
}

bool operator==(const CyclotomicElement& lhs, const CyclotomicElement& rhs) {
  if (lhs.order() == rhs.order()) return lhs.c_ == rhs.c_;
  if (rhs.order() == 1) return lhs.is_rational() && lhs.c_[0] == rhs.c_[0];
  if (lhs.order() == 1) return rhs.is_rational() && rhs.c_[0] == lhs.c_[0];
  const unsigned n = std::lcm(lhs.order(), rhs.order());
  return lhs.lifted(n).c_ == rhs.lifted(n).c_;
}

CyclotomicElement cyc_invert(const CyclotomicElement& e) { return e.inverse(); }

Rational rational_part(const CyclotomicElement& e) { return e.rational_part(); }

}  // namespace orbicalc::exactmath
