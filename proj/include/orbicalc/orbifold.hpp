#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbicalc/exactmath/rational.hpp"

namespace orbicalc::orbifold {

using exactmath::Integer;
using exactmath::Rational;

/// Isolated singular point with cyclic isotropy Z_m acting on the tangent
/// space with weights (a, b): the generator acts as (zeta^a, zeta^b).
struct CyclicSingularPoint {
  std::string label;
  unsigned group_order = 1;
  std::array<unsigned, 2> tangent_weights{0, 0};

  /// Validating constructor. Weights are reduced mod m; requires
  /// gcd(a, b, m) = 1 (effective action).
  static CyclicSingularPoint make(std::string label, unsigned group_order, long a, long b);

  /// Both weights prime to the order, i.e. the point is an isolated fixed point.
  bool is_isolated() const;
};

/// P(d1, d2, d3) with pairwise coprime weights 1 < d1 < d2 < d3.
class WeightedProjectivePlane {
 public:
  /// Throws ValidationError unless the weights are admissible.
  WeightedProjectivePlane(unsigned d1, unsigned d2, unsigned d3);

  static bool admissible(unsigned d1, unsigned d2, unsigned d3);

  const std::array<unsigned, 3>& weights() const { return d_; }
  /// 1-based, i in {1, 2, 3}.
  unsigned weight(int i) const;
  /// d1 * d2 * d3; every pairing of degrees is divided by this.
  Integer volume() const;
  unsigned weight_sum() const { return d_[0] + d_[1] + d_[2]; }

  /// p_i has isotropy Z_{d_i} and tangent weights the other two weights mod
  /// d_i, in increasing index order.
  CyclicSingularPoint singular_point(int i) const;
  std::array<CyclicSingularPoint, 3> singular_points() const;

  friend bool operator==(const WeightedProjectivePlane&, const WeightedProjectivePlane&) = default;

 private:
  std::array<unsigned, 3> d_;
};

/// Degree of the canonical bundle, -(d1 + d2 + d3).
Integer canonical_degree(const WeightedProjectivePlane& x);

/// E = E0^e over a weighted projective plane.
struct OrbifoldLineBundle {
  WeightedProjectivePlane ambient;
  Integer degree;
};

/// Weight of the isotropy action on the fiber at p_i: e mod d_i.
unsigned fiber_weight(const OrbifoldLineBundle& bundle, int i);

/// Orbifold Riemann surface: underlying genus, isotropy order m_Sigma at
/// regular points, and orders m_i of the orbifold points.
class OrbifoldRiemannSurface {
 public:
  /// Each m_i must be a proper multiple of m_Sigma.
  OrbifoldRiemannSurface(unsigned underlying_genus, unsigned regular_multiplicity,
                         std::vector<unsigned> orbifold_point_orders);

  static OrbifoldRiemannSurface sphere(std::vector<unsigned> orbifold_point_orders = {}) {
    return {0, 1, std::move(orbifold_point_orders)};
  }

  unsigned underlying_genus() const { return genus_; }
  unsigned regular_multiplicity() const { return m_sigma_; }
  const std::vector<unsigned>& orbifold_point_orders() const { return orders_; }

 private:
  unsigned genus_;
  unsigned m_sigma_;
  std::vector<unsigned> orders_;
};

/// g_Sigma = g/m_Sigma + sum_i (1/(2 m_Sigma) - 1/(2 m_i)).
Rational orbifold_genus(const OrbifoldRiemannSurface& sigma);

/// c1(T Sigma) . [Sigma] = 2/m_Sigma - 2 g_Sigma.
Rational euler_pairing(const OrbifoldRiemannSurface& sigma);

/// General closed 4-orbifold with isolated cyclic singularities. The
/// intersection pairing on H^2 is not modelled; callers supply pairings.
struct OrbifoldSurface4 {
  std::vector<CyclicSingularPoint> points;
  std::optional<Rational> pairing_scale;
};

}  // namespace orbicalc::orbifold
