#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbicalc/exactmath/cyclotomic.hpp"
#include "orbicalc/exactmath/rational.hpp"
#include "orbicalc/orbifold.hpp"

namespace orbicalc::moduli {

using exactmath::Integer;
using exactmath::Rational;
using orbifold::CyclicSingularPoint;
using orbifold::WeightedProjectivePlane;

/// Orbifold point z_i of the domain: order m_i and the weights of
/// rho_{z_i}(mu_{m_i}) on the ambient tangent space.
struct IndexPoint {
  unsigned order;
  unsigned weight1;
  unsigned weight2;
};

struct IndexInput {
  /// c1(TX) . f_*[Sigma]
  Rational chern_pairing;
  /// At most three points on the sphere domain.
  std::vector<IndexPoint> points;

  void validate() const;
};

struct IndexDimension {
  /// d~ = c1(TX).f_*[Sigma] + 2 - sum (m_i1 + m_i2)/m_i
  Integer d_tilde;
  /// 2 d~
  Integer unreduced_dimension;
  /// 2 d~ - (6 - 2k)
  Integer dimension;
  /// The sum of weight corrections that was subtracted.
  Rational correction;
};

/// Throws NonIntegralIndex when d~ is not an integer.
IndexDimension index_dimension(const IndexInput& input);

/// Normal weights (m1, m2) at two isolated fixed points on an invariant
/// embedded (-2)-sphere in a Z_n-manifold compatible with a nonnegative
/// integral index: the sphere domain has two points of order n acting by
/// (1, m_i), and c1(TX).C = 0. Lexicographic order.
std::vector<std::pair<unsigned, unsigned>> fixed_point_weight_pairs(unsigned n);

/// delta in [0, m) with c - b delta = 0 (mod m). NotInvertible unless
/// gcd(b, m) = 1.
Integer delta_solve(unsigned m, long b, long c);

/// Evaluates the singular-point character sums
///   I = (1/m) sum_{x=1}^{m-1} 2 (zeta^{cx} - 1) / ((1 - zeta^{-ax})(1 - zeta^{-bx}))
/// for one group order m. Inverses of 1 - zeta^k and their pairwise
/// products are cached, so sweeping many (a, b, c) for one m is cheap.
/// Not thread-safe; use one evaluator per thread.
class CharacterSumEvaluator {
 public:
  explicit CharacterSumEvaluator(unsigned m);

  unsigned order() const { return m_; }

  /// The sum as an element of Q(zeta_m).
  exactmath::CyclotomicElement sum(unsigned a, unsigned b, unsigned c);

  /// rational_part of sum(); NotRational if the sum is not rational.
  Rational evaluate(unsigned a, unsigned b, unsigned c);

 private:
  // m^2 / ((1 - zeta^u)(1 - zeta^v)) as integer coefficients of 1, zeta,
  // ..., zeta^{m-1}.
  const std::vector<Integer>& scaled_product(unsigned u, unsigned v);

  unsigned m_;
  std::vector<std::optional<exactmath::CyclotomicElement>> inverses_;
  std::map<std::pair<unsigned, unsigned>, std::vector<Integer>> products_;
};

/// Closed form (m - 1 - 2 delta)/m, valid when c is congruent to one of the
/// tangent weights; delta solves against the other weight.
struct ClosedForm {
  Rational value;
  Integer delta;
  /// Index (0 or 1) of the tangent weight that c matches.
  int aligned_weight;
};

std::optional<ClosedForm> closed_form(unsigned m, unsigned a, unsigned b, unsigned c);

/// I for a cyclic point with tangent weights (a, b) and fiber weight c.
/// Cross-checks against closed_form when it applies and throws
/// std::logic_error on disagreement.
Rational I_contribution(unsigned m, unsigned a, unsigned b, unsigned c);

struct PointCorrection {
  std::string label;
  unsigned order;
  std::array<unsigned, 2> tangent_weights;
  unsigned fiber_weight;
  Rational value;
  std::optional<ClosedForm> closed;
};

PointCorrection point_correction(const CyclicSingularPoint& point, unsigned fiber_weight,
                                 CharacterSumEvaluator* evaluator = nullptr);

/// Seiberg-Witten input: the singular points with fiber weights and the two
/// pairings c1(E)^2 and c1(E).c1(K_X). A point's `cyclic` flag is false for
/// non-cyclic isotropy, which is rejected.
struct SWPoint {
  CyclicSingularPoint point;
  unsigned fiber_weight;
  bool cyclic = true;
};

struct SWInput {
  std::vector<SWPoint> points;
  Rational c1_squared;
  Rational c1_dot_canonical;

  /// E = E0^e on P(d1, d2, d3): c1(E)^2 = e^2/D, c1(E).c1(K) = -e s/D.
  static SWInput weighted_projective(const WeightedProjectivePlane& x, const Integer& e);
};

struct SWDimension {
  Rational value;
  Rational c1_squared;
  Rational c1_dot_canonical;
  std::vector<PointCorrection> points;
  std::vector<std::string> warnings;
};

/// d(E) = c1(E)^2 - c1(E).c1(K_X) + sum I_i.
SWDimension sw_dimension(const SWInput& input);

}  // namespace orbicalc::moduli
