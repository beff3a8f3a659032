#include "orbicalc/germs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "orbicalc/errors.hpp"
#include "orbicalc/exactmath/resultant.hpp"

namespace orbicalc::germs {

namespace {

using KPoly = exactmath::Polynomial<CyclotomicElement>;
// Polynomials in t whose coefficients are polynomials in s.
using Bivariate = exactmath::Polynomial<KPoly>;

std::vector<unsigned> support(const Series& s) {
  std::vector<unsigned> out;
  const auto& c = s.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_zero()) out.push_back(static_cast<unsigned>(i));
  }
  return out;
}

LeadingOrder order_of(const Series& s) {
  const int o = s.lowest_order();
  if (o < 0) return std::nullopt;
  return static_cast<unsigned>(o);
}

// x1(s) - x2(t) viewed as a polynomial in t over K[s].
Bivariate difference(const Series& in_s, const Series& in_t) {
  std::vector<KPoly> c(static_cast<std::size_t>(std::max(in_t.degree(), 0) + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = KPoly::constant(-in_t.coefficient(i));
  c[0] += in_s;
  return Bivariate(std::move(c));
}

std::string series_str(const Series& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned e : support(s)) {
    const CyclotomicElement& c = s.coefficients()[e];
    std::string coef = c.str();
    const bool compound = !c.is_rational() && coef.find_first_of("+-", 1) != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (compound) {
      os << "(" << coef << ")*";
    } else if (coef == "1") {
    } else if (coef == "-1") {
      os << "-";
    } else {
      os << coef << "*";
    }
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace

BranchGerm::BranchGerm(Series x, Series y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.is_zero() && y_.is_zero()) throw ValidationError("branch germ has both components identically zero");
  if (!x_.coefficient(0).is_zero() || !y_.coefficient(0).is_zero()) {
    throw ValidationError("branch germ must pass through the origin (no constant terms)");
  }
  unsigned g = 0;
  for (unsigned e : support(x_)) g = std::gcd(g, e);
  for (unsigned e : support(y_)) g = std::gcd(g, e);
  if (g != 1) {
    throw ValidationError("branch germ " + str() + " is multiply covered (exponent gcd " + std::to_string(g) + ")");
  }
  const Series common = exactmath::gcd(x_, y_);
  if (support(common).size() != 1) {
    throw ValidationError("parametrization " + str() + " meets the origin away from t = 0");
  }
}

BranchGerm BranchGerm::monomial(const CyclotomicElement& a, unsigned l1, const CyclotomicElement& b, unsigned l2) {
  return BranchGerm(Series::monomial(a, l1), Series::monomial(b, l2));
}

LeadingOrders BranchGerm::leading_orders() const { return {order_of(x_), order_of(y_)}; }

unsigned BranchGerm::max_exponent() const {
  return static_cast<unsigned>(std::max({x_.degree(), y_.degree(), 0}));
}

bool BranchGerm::is_embedded() const {
  const auto [l1, l2] = leading_orders();
  return l1 == 1u || l2 == 1u;
}

bool BranchGerm::is_monomial() const { return support(x_).size() <= 1 && support(y_).size() <= 1; }

BranchGerm BranchGerm::acted(unsigned m, unsigned a, unsigned b, unsigned k) const {
  const auto ak = static_cast<std::int64_t>(a) * k;
  const auto bk = static_cast<std::int64_t>(b) * k;
  return BranchGerm(x_ * CyclotomicElement::zeta(m, ak), y_ * CyclotomicElement::zeta(m, bk));
}

std::string BranchGerm::str() const { return "(" + series_str(x_) + ", " + series_str(y_) + ")"; }

unsigned default_truncation(const BranchGerm& g1, const BranchGerm& g2) {
  const unsigned m = std::max(g1.max_exponent(), g2.max_exponent());
  const auto p2 = static_cast<unsigned>(std::max(g2.x().degree(), 0));
  const auto q2 = static_cast<unsigned>(std::max(g2.y().degree(), 0));
  const auto deg_x1 = static_cast<unsigned>(std::max(g1.x().degree(), 0));
  const auto deg_y1 = static_cast<unsigned>(std::max(g1.y().degree(), 0));
  return std::max(4 * m + 4, q2 * deg_x1 + p2 * deg_y1 + 1);
}

Integer local_intersection(const BranchGerm& g1, const BranchGerm& g2, const IntersectionOptions& options) {
  const unsigned truncation = options.truncation.value_or(default_truncation(g1, g2));
  const Bivariate a = difference(g1.x(), g2.x());
  const Bivariate b = difference(g1.y(), g2.y());
  const KPoly res = exactmath::resultant(a, b, [](const KPoly& num, const KPoly& den) {
    return exactmath::divide_exact(num, den);
  });
  const int order = res.lowest_order();
  if (order < 0 || static_cast<unsigned>(order) >= truncation) {
    throw CommonBranch("germs " + g1.str() + " and " + g2.str() + " share a branch (composed series vanishes to order " +
                       std::to_string(truncation) + ")");
  }
  return order;
}

Integer self_intersection_monomial(unsigned l1, unsigned l2) {
  if (l1 == 0 || l2 == 0 || std::gcd(l1, l2) != 1) {
    throw NotCoprime("leading orders (" + std::to_string(l1) + ", " + std::to_string(l2) + ") are not coprime");
  }
  if (l1 == 1 || l2 == 1) return 0;
  // Every n > l1 l2 - l1 - l2 lies in <l1, l2>.
  const unsigned long frobenius = static_cast<unsigned long>(l1) * l2 - l1 - l2;
  std::vector<bool> reachable(frobenius + 1, false);
  reachable[0] = true;
  for (unsigned long n = 1; n <= frobenius; ++n) {
    reachable[n] = (n >= l1 && reachable[n - l1]) || (n >= l2 && reachable[n - l2]);
  }
  return static_cast<unsigned long>(std::count(reachable.begin(), reachable.end(), false));
}

SelfIntersection self_intersection(const BranchGerm& g) {
  if (g.is_embedded()) return {0, true};
  const auto [l1, l2] = g.leading_orders();
  if (g.is_monomial() && l1 && l2 && std::gcd(*l1, *l2) == 1) return {self_intersection_monomial(*l1, *l2), true};
  const Rational bound = self_intersection_lower_bound(g.leading_orders());
  return {-Rational(-bound).floor(), false};
}

Rational self_intersection_lower_bound(const LeadingOrders& orders) {
  if (!orders.first || !orders.second) return 0;
  return Rational(Integer(*orders.first - 1) * (*orders.second - 1), 2);
}

std::optional<Integer> intersection_lower_bound(const LeadingOrders& first, const LeadingOrders& second) {
  auto product = [](const LeadingOrder& u, const LeadingOrder& v) -> std::optional<Integer> {
    if (!u || !v) return std::nullopt;
    return Integer(*u) * *v;
  };
  const auto p = product(first.first, second.second);
  const auto q = product(first.second, second.first);
  if (!p) return q;
  if (!q) return p;
  return std::min(*p, *q);
}

Orbit orbit_branches(const BranchGerm& g, unsigned m, std::array<unsigned, 2> weights) {
  if (m < 1) throw ValidationError("group order must be positive");
  const unsigned a = weights[0] % m;
  const unsigned b = weights[1] % m;
  if (std::gcd(std::gcd(a, b), m) != 1) throw ValidationError("group action is not effective");
  const auto sx = support(g.x());
  const auto sy = support(g.y());
  // g_k is t -> c t reparametrization of g iff c = zeta_m^j with
  // j e = a k (mod m) on supp x and j e = b k (mod m) on supp y.
  auto fixes = [&](unsigned k) {
    for (unsigned j = 0; j < m; ++j) {
      const bool ok =
          std::all_of(sx.begin(), sx.end(),
                      [&](unsigned e) { return (static_cast<unsigned long>(j) * e) % m == (static_cast<unsigned long>(a) * k) % m; }) &&
          std::all_of(sy.begin(), sy.end(),
                      [&](unsigned e) { return (static_cast<unsigned long>(j) * e) % m == (static_cast<unsigned long>(b) * k) % m; });
      if (ok) return true;
    }
    return false;
  };
  unsigned stabilizer = 0;
  for (unsigned k = 0; k < m; ++k) stabilizer += fixes(k) ? 1 : 0;
  Orbit orbit{{}, stabilizer};
  const unsigned count = m / stabilizer;
  for (unsigned k = 0; k < count; ++k) orbit.branches.push_back(k == 0 ? g : g.acted(m, a, b, k));
  return orbit;
}

}  // namespace orbicalc::germs
