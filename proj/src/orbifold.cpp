#include "orbicalc/orbifold.hpp"

#include <numeric>

#include "orbicalc/errors.hpp"
#include "orbicalc/exactmath/modular.hpp"

namespace orbicalc::orbifold {

namespace {

unsigned residue(long value, unsigned m) {
  const long mm = static_cast<long>(m);
  return static_cast<unsigned>(((value % mm) + mm) % mm);
}

}  // namespace

CyclicSingularPoint CyclicSingularPoint::make(std::string label, unsigned group_order, long a, long b) {
  if (group_order < 1) throw ValidationError("group order must be positive");
  const unsigned ra = residue(a, group_order);
  const unsigned rb = residue(b, group_order);
  if (std::gcd(std::gcd(ra, rb), group_order) != 1) {
    throw ValidationError("action of Z_" + std::to_string(group_order) + " with weights (" + std::to_string(ra) + ", " +
                          std::to_string(rb) + ") is not effective");
  }
  return CyclicSingularPoint{std::move(label), group_order, {ra, rb}};
}

bool CyclicSingularPoint::is_isolated() const {
  return std::gcd(tangent_weights[0], group_order) == 1 && std::gcd(tangent_weights[1], group_order) == 1;
}

bool WeightedProjectivePlane::admissible(unsigned d1, unsigned d2, unsigned d3) {
  return 1 < d1 && d1 < d2 && d2 < d3 && std::gcd(d1, d2) == 1 && std::gcd(d1, d3) == 1 && std::gcd(d2, d3) == 1;
}

WeightedProjectivePlane::WeightedProjectivePlane(unsigned d1, unsigned d2, unsigned d3) : d_{d1, d2, d3} {
  if (!(1 < d1 && d1 < d2 && d2 < d3)) {
    throw ValidationError("weights must satisfy 1 < d1 < d2 < d3, got (" + std::to_string(d1) + ", " +
                          std::to_string(d2) + ", " + std::to_string(d3) + ")");
  }
  if (!admissible(d1, d2, d3)) {
    throw ValidationError("weights (" + std::to_string(d1) + ", " + std::to_string(d2) + ", " + std::to_string(d3) +
                          ") are not pairwise relatively prime");
  }
}

unsigned WeightedProjectivePlane::weight(int i) const {
  if (i < 1 || i > 3) throw ValidationError("singular point index must be 1, 2 or 3");
  return d_[static_cast<std::size_t>(i - 1)];
}

Integer WeightedProjectivePlane::volume() const { return Integer(d_[0]) * d_[1] * d_[2]; }

CyclicSingularPoint WeightedProjectivePlane::singular_point(int i) const {
  const unsigned m = weight(i);
  std::array<unsigned, 2> others{};
  std::size_t k = 0;
  for (int j = 1; j <= 3; ++j) {
    if (j != i) others[k++] = weight(j) % m;
  }
  return CyclicSingularPoint{"p" + std::to_string(i), m, others};
}

std::array<CyclicSingularPoint, 3> WeightedProjectivePlane::singular_points() const {
  return {singular_point(1), singular_point(2), singular_point(3)};
}

Integer canonical_degree(const WeightedProjectivePlane& x) { return -Integer(x.weight_sum()); }

unsigned fiber_weight(const OrbifoldLineBundle& bundle, int i) {
  const Integer r = exactmath::mod_floor(bundle.degree, Integer(bundle.ambient.weight(i)));
  return static_cast<unsigned>(r.get_ui());
}

OrbifoldRiemannSurface::OrbifoldRiemannSurface(unsigned underlying_genus, unsigned regular_multiplicity,
                                               std::vector<unsigned> orbifold_point_orders)
    : genus_(underlying_genus), m_sigma_(regular_multiplicity), orders_(std::move(orbifold_point_orders)) {
  if (m_sigma_ < 1) throw ValidationError("regular multiplicity must be positive");
  for (unsigned m : orders_) {
    if (m <= m_sigma_ || m % m_sigma_ != 0) {
      throw ValidationError("orbifold point order " + std::to_string(m) + " is not a proper multiple of " +
                            std::to_string(m_sigma_));
    }
  }
}

Rational orbifold_genus(const OrbifoldRiemannSurface& sigma) {
  const Rational ms(sigma.regular_multiplicity());
  Rational g = Rational(sigma.underlying_genus()) / ms;
  for (unsigned m : sigma.orbifold_point_orders()) {
    g += Rational(1) / (2 * ms) - Rational(Integer(1), Integer(2 * m));
  }
  return g;
}

Rational euler_pairing(const OrbifoldRiemannSurface& sigma) {
  return Rational(2) / Rational(sigma.regular_multiplicity()) - 2 * orbifold_genus(sigma);
}

}  // namespace orbicalc::orbifold
