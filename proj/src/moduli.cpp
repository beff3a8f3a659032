#include "orbicalc/moduli.hpp"

#include <numeric>
#include <stdexcept>

#include "orbicalc/errors.hpp"
#include "orbicalc/exactmath/modular.hpp"

namespace orbicalc::moduli {

using exactmath::CyclotomicElement;

void IndexInput::validate() const {
  if (points.size() > 3) throw ValidationError("at most three orbifold points on a sphere domain", "/points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const std::string where = "/points/" + std::to_string(i);
    if (p.order < 2) throw ValidationError("orbifold point order must be at least 2", where);
    if (p.weight1 == 0 || p.weight1 >= p.order || p.weight2 == 0 || p.weight2 >= p.order) {
      throw ValidationError("weights must satisfy 0 < m_ij < m_i", where);
    }
  }
}

IndexDimension index_dimension(const IndexInput& input) {
  input.validate();
  Rational correction;
  for (const auto& p : input.points) correction += Rational(Integer(p.weight1 + p.weight2), Integer(p.order));
  const Rational d = input.chern_pairing + 2 - correction;
  if (!d.is_integer()) {
    throw NonIntegralIndex("index " + d.str() + " is not an integer; the weight data is inconsistent");
  }
  const Integer dt = d.numerator();
  const auto k = static_cast<long>(input.points.size());
  return {dt, 2 * dt, 2 * dt - (6 - 2 * k), correction};
}

std::vector<std::pair<unsigned, unsigned>> fixed_point_weight_pairs(unsigned n) {
  if (n < 2) throw ValidationError("group order must be at least 2", "/n");
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned m1 = 1; m1 < n; ++m1) {
    for (unsigned m2 = 1; m2 < n; ++m2) {
      const IndexInput input{Rational(0), {{n, 1, m1}, {n, 1, m2}}};
      try {
        if (index_dimension(input).dimension >= 0) out.emplace_back(m1, m2);
      } catch (const NonIntegralIndex&) {
      }
    }
  }
  return out;
}

Integer delta_solve(unsigned m, long b, long c) {
  const Integer mm(m);
  return exactmath::mod_floor(Integer(c) * exactmath::mod_inverse(Integer(b), mm), mm);
}

CharacterSumEvaluator::CharacterSumEvaluator(unsigned m) : m_(m), inverses_(m) {
  if (m < 1) throw ValidationError("group order must be positive");
}

const std::vector<Integer>& CharacterSumEvaluator::scaled_product(unsigned u, unsigned v) {
  if (u > v) std::swap(u, v);
  auto it = products_.find({u, v});
  if (it != products_.end()) return it->second;
  auto inverse = [&](unsigned k) -> const CyclotomicElement& {
    auto& slot = inverses_[k];
    if (!slot) slot = (CyclotomicElement(1) - CyclotomicElement::zeta(m_, k)).lifted(m_).inverse().lifted(m_);
    return *slot;
  };
  const CyclotomicElement p = (inverse(u) * inverse(v)).lifted(m_);
  // Each factor has denominator dividing m, so m^2 clears the product.
  const Integer scale = Integer(m_) * m_;
  std::vector<Integer> scaled(m_);
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational s = c[i] * Rational(scale);
    if (!s.is_integer()) throw std::logic_error("character sum denominator exceeds m^2");
    scaled[i] = s.numerator();
  }
  return products_.emplace(std::make_pair(u, v), std::move(scaled)).first->second;
}

CyclotomicElement CharacterSumEvaluator::sum(unsigned a, unsigned b, unsigned c) {
  const unsigned m = m_;
  if (std::gcd(a % m, m) != 1 || std::gcd(b % m, m) != 1) {
    throw ValidationError("tangent weights must be prime to the group order (isolated point)");
  }
  if (m == 1) return {};
  // Work in Z[x]/(x^m - 1), where multiplying by zeta^k is a rotation.
  std::vector<Integer> acc(m);
  for (unsigned x = 1; x < m; ++x) {
    const auto neg = [&](unsigned w) {
      const unsigned r = static_cast<unsigned>((static_cast<unsigned long>(w % m) * x) % m);
      return (m - r) % m;
    };
    const auto& p = scaled_product(neg(a), neg(b));
    const auto shift = static_cast<unsigned>((static_cast<unsigned long>(c % m) * x) % m);
    if (shift == 0) continue;
    for (unsigned i = 0; i < m; ++i) {
      if (p[i] == 0) continue;
      acc[(i + shift) % m] += p[i];
      acc[i] -= p[i];
    }
  }
  const Rational factor(Integer(2), Integer(m) * m * m);
  std::vector<Rational> coefficients(m);
  for (unsigned i = 0; i < m; ++i) coefficients[i] = Rational(acc[i]) * factor;
  return CyclotomicElement::from_power_basis(m, std::move(coefficients));
}

Rational CharacterSumEvaluator::evaluate(unsigned a, unsigned b, unsigned c) { return sum(a, b, c).rational_part(); }

std::optional<ClosedForm> closed_form(unsigned m, unsigned a, unsigned b, unsigned c) {
  if (m < 2) return std::nullopt;
  a %= m;
  b %= m;
  c %= m;
  int aligned;
  unsigned other;
  if (c == a) {
    aligned = 0;
    other = b;
  } else if (c == b) {
    aligned = 1;
    other = a;
  } else {
    return std::nullopt;
  }
  const Integer delta = delta_solve(m, other, c);
  return ClosedForm{Rational(Integer(m - 1) - 2 * delta, Integer(m)), delta, aligned};
}

namespace {

PointCorrection evaluate(const std::string& label, unsigned m, unsigned a, unsigned b, unsigned c,
                         CharacterSumEvaluator* evaluator) {
  if (m < 1) throw ValidationError("group order must be positive");
  std::optional<CharacterSumEvaluator> local;
  if (evaluator == nullptr || evaluator->order() != m) evaluator = &local.emplace(m);
  PointCorrection out{label, m, {a % m, b % m}, c % m, evaluator->evaluate(a, b, c), closed_form(m, a, b, c)};
  if (out.closed && out.closed->value != out.value) {
    throw std::logic_error("character sum " + out.value.str() + " disagrees with closed form " +
                           out.closed->value.str());
  }
  return out;
}

}  // namespace

Rational I_contribution(unsigned m, unsigned a, unsigned b, unsigned c) {
  return evaluate("", m, a, b, c, nullptr).value;
}

PointCorrection point_correction(const CyclicSingularPoint& point, unsigned fiber_weight,
                                 CharacterSumEvaluator* evaluator) {
  return evaluate(point.label, point.group_order, point.tangent_weights[0], point.tangent_weights[1], fiber_weight,
                  evaluator);
}

SWInput SWInput::weighted_projective(const WeightedProjectivePlane& x, const Integer& e) {
  SWInput input;
  const Rational volume(x.volume());
  input.c1_squared = Rational(e * e) / volume;
  input.c1_dot_canonical = -Rational(e * x.weight_sum()) / volume;
  const orbifold::OrbifoldLineBundle bundle{x, e};
  for (int i = 1; i <= 3; ++i) input.points.push_back({x.singular_point(i), orbifold::fiber_weight(bundle, i), true});
  return input;
}

SWDimension sw_dimension(const SWInput& input) {
  SWDimension out;
  out.c1_squared = input.c1_squared;
  out.c1_dot_canonical = input.c1_dot_canonical;
  out.value = input.c1_squared - input.c1_dot_canonical;
  for (const auto& p : input.points) {
    if (!p.cyclic) {
      throw UnsupportedGroup("point " + p.point.label + " has non-cyclic isotropy; only cyclic groups are supported");
    }
    if (!p.point.is_isolated()) {
      throw ValidationError("point " + p.point.label + " is not an isolated singularity");
    }
    auto correction = point_correction(p.point, p.fiber_weight);
    out.value += correction.value;
    out.points.push_back(std::move(correction));
  }
  if (!out.value.is_integer()) {
    out.warnings.push_back("d(E) = " + out.value.str() + " is not an integer");
  } else if (out.value.numerator() % 2 != 0) {
    out.warnings.push_back("d(E) = " + out.value.str() + " is odd");
  }
  return out;
}

}  // namespace orbicalc::moduli
