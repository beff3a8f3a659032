#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbicalc/exactmath/cyclotomic.hpp"
#include "orbicalc/exactmath/polynomial.hpp"

namespace orbicalc::germs {

using exactmath::CyclotomicElement;
using exactmath::Integer;
using exactmath::Rational;
using Series = exactmath::Polynomial<CyclotomicElement>;

/// Parses a coefficient: a product of rationals and `zeta(m)` or
/// `zeta(m)^k` tokens, e.g. "-3/2*zeta(5)^2". Throws ValidationError.
CyclotomicElement parse_coefficient(std::string_view text);

/// Lowest exponent of a component; nullopt means the component vanishes
/// identically (order infinity).
using LeadingOrder = std::optional<unsigned>;

struct LeadingOrders {
  LeadingOrder first;
  LeadingOrder second;
};

/// Polynomial branch t -> (x(t), y(t)) through the origin of C^2.
///
/// Accepted germs are irreducible and meet the origin only at t = 0: the
/// exponents occurring in x and y have gcd 1 and x, y share no root other
/// than 0. Both conditions are checked on construction.
class BranchGerm {
 public:
  BranchGerm(Series x, Series y);

  /// (a t^l1, b t^l2); a zero coefficient drops that term.
  static BranchGerm monomial(const CyclotomicElement& a, unsigned l1, const CyclotomicElement& b, unsigned l2);

  /// Parses "(t^3, 2*t^5)", "(t, -t^2 + 1/2*t^3)", "(zeta(3)^2*t, 0)".
  static BranchGerm parse(std::string_view text);

  const Series& x() const { return x_; }
  const Series& y() const { return y_; }

  LeadingOrders leading_orders() const;
  unsigned max_exponent() const;
  /// Some component has order 1: the germ is a smooth graph.
  bool is_embedded() const;
  /// Each component has at most one term.
  bool is_monomial() const;

  /// Image under (x, y) -> (zeta_m^(a k) x, zeta_m^(b k) y).
  BranchGerm acted(unsigned m, unsigned a, unsigned b, unsigned k) const;

  std::string str() const;

 private:
  Series x_;
  Series y_;
};

struct IntersectionOptions {
  /// Order at or beyond which the composed series is treated as vanishing.
  /// Unset means default_truncation().
  std::optional<unsigned> truncation;
};

/// max(4 M + 4, degree bound of the resultant + 1), M the largest exponent
/// in either germ. The second term makes the default never fire on a
/// nonzero resultant.
unsigned default_truncation(const BranchGerm& g1, const BranchGerm& g2);

/// Local intersection number at the origin: the order in s of
/// Res_t(x1(s) - x2(t), y1(s) - y2(t)), i.e. g2's implicit equation
/// evaluated along g1. Throws CommonBranch if that order reaches the
/// truncation.
Integer local_intersection(const BranchGerm& g1, const BranchGerm& g2, const IntersectionOptions& options = {});

/// Number of gaps of the numerical semigroup <l1, l2>, counted by brute
/// force below the Frobenius bound. Throws NotCoprime unless gcd = 1.
Integer self_intersection_monomial(unsigned l1, unsigned l2);

struct SelfIntersection {
  Integer value;
  /// False when `value` is only the lower bound ceil((l1-1)(l2-1)/2).
  bool exact;
};

/// Exact for embedded germs (0) and coprime monomial germs (gap count);
/// otherwise the lower bound with exact = false.
SelfIntersection self_intersection(const BranchGerm& g);

/// (l1 - 1)(l2 - 1) / 2; zero when either order is infinite.
Rational self_intersection_lower_bound(const LeadingOrders& orders);

/// min(l1 l2', l2 l1') with infinity absorbing in products and ignored by
/// min. nullopt when both products are infinite.
std::optional<Integer> intersection_lower_bound(const LeadingOrders& first, const LeadingOrders& second);

struct Orbit {
  /// Distinct images, one per coset of the stabilizer.
  std::vector<BranchGerm> branches;
  /// Order of the subgroup of Z_m mapping the branch to a reparametrization
  /// t -> c t of itself.
  unsigned stabilizer_order;
};

/// Images of g under Z_m acting with weights (a, b). Requires
/// gcd(a, b, m) = 1.
Orbit orbit_branches(const BranchGerm& g, unsigned m, std::array<unsigned, 2> weights);

}  // namespace orbicalc::germs
