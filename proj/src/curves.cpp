#include "orbicalc/curves.hpp"

#include "orbicalc/errors.hpp"

namespace orbicalc::curves {

namespace {

Integer sum_cross(const std::vector<BranchGerm>& a, const std::vector<BranchGerm>& b,
                  const IntersectionOptions& options) {
  Integer total = 0;
  for (const auto& ga : a) {
    for (const auto& gb : b) total += germs::local_intersection(ga, gb, options);
  }
  return total;
}

}  // namespace

CurveClass CurveClass::make(const WeightedProjectivePlane& ambient, const Rational& degree, unsigned multiplicity) {
  if (multiplicity != 1) {
    throw ValidationError("curves in a weighted projective plane have multiplicity 1 (isolated singularities)",
                          "/multiplicity");
  }
  return CurveClass{ambient, degree, multiplicity};
}

CurveNumbers numbers(const CurveClass& c) {
  const Rational sum(Integer(c.ambient.weight_sum()));
  return CurveNumbers{intersection(c, c), pairing(sum, c), c.multiplicity};
}

Rational pairing(const Rational& class_degree, const CurveClass& c) {
  return class_degree * c.degree / Rational(c.ambient.volume() * c.multiplicity);
}

Rational intersection(const CurveClass& c1, const CurveClass& c2) {
  if (!(c1.ambient == c2.ambient)) throw ValidationError("curves live on different weighted projective planes");
  return c1.degree * c2.degree / Rational(c1.ambient.volume() * c1.multiplicity * c2.multiplicity);
}

Rational virtual_genus(const CurveNumbers& c) {
  return (c.self_intersection - c.chern_pairing) / 2 + Rational(Integer(1), Integer(c.multiplicity));
}

Rational virtual_genus(const CurveClass& c) { return virtual_genus(numbers(c)); }

MarkedPointData MarkedPointData::make(std::string id, unsigned domain_order, std::string ambient, unsigned group_order,
                                      std::vector<BranchGerm> branches, unsigned stabilizer_order) {
  if (domain_order < 1 || group_order < 1 || stabilizer_order < 1) {
    throw ValidationError("orders at marked point '" + id + "' must be positive");
  }
  if (branches.empty()) throw ValidationError("marked point '" + id + "' has no local representatives");
  if (branches.size() * stabilizer_order != group_order) {
    throw ValidationError("marked point '" + id + "': " + std::to_string(branches.size()) + " branches x stabilizer " +
                          std::to_string(stabilizer_order) + " != |G_p| = " + std::to_string(group_order));
  }
  return MarkedPointData{std::move(id), domain_order, std::move(ambient), group_order, std::move(branches),
                         stabilizer_order};
}

MarkedPointData MarkedPointData::from_germ(std::string id, unsigned domain_order, const CyclicSingularPoint& point,
                                           const BranchGerm& germ) {
  auto orbit = germs::orbit_branches(germ, point.group_order, point.tangent_weights);
  return make(std::move(id), domain_order, point.label, point.group_order, std::move(orbit.branches),
              orbit.stabilizer_order);
}

MarkedPointData MarkedPointData::smooth(std::string id, std::vector<BranchGerm> branches) {
  if (branches.size() != 1) {
    throw ValidationError("a smooth ambient point carries exactly one local representative per domain point");
  }
  return make(std::move(id), 1, "smooth", 1, std::move(branches), 1);
}

const Rational& Contribution::require_exact() const {
  if (!exact) throw InexactSelfIntersection("only a lower bound " + value.str() + " is known");
  return value;
}

Contribution k_z(const MarkedPointData& z, const IntersectionOptions& options) {
  Integer diagonal = 0;
  bool exact = true;
  for (const auto& branch : z.branches) {
    const auto self = germs::self_intersection(branch);
    diagonal += self.value;
    exact = exact && self.exact;
  }
  Integer off_diagonal = 0;
  for (std::size_t a = 0; a < z.branches.size(); ++a) {
    for (std::size_t b = a + 1; b < z.branches.size(); ++b) {
      off_diagonal += 2 * germs::local_intersection(z.branches[a], z.branches[b], options);
    }
  }
  // First sum plus the full double sum, whose diagonal repeats the first.
  const Integer total = 2 * diagonal + off_diagonal;
  return {Rational(total, Integer(2 * z.group_order)), exact};
}

Contribution k_pair(const MarkedPointData& z, const MarkedPointData& other, const IntersectionOptions& options) {
  if (z.ambient != other.ambient || z.group_order != other.group_order) {
    throw ValidationError("points '" + z.id + "' and '" + other.id + "' do not map to the same ambient point");
  }
  return {Rational(sum_cross(z.branches, other.branches, options), Integer(z.group_order)), true};
}

Contribution k_int(const MarkedPointData& z, const MarkedPointData& other, const IntersectionOptions& options) {
  return k_pair(z, other, options);
}

Rational k_z_lower_bound(unsigned domain_order, unsigned group_order) {
  return Rational(Integer(1), Integer(2 * domain_order)) * (Rational(Integer(group_order), Integer(domain_order)) - 1);
}

void CurvePresentation::validate() const {
  for (const auto& [i, j] : identified_pairs) {
    if (i >= marked_points.size() || j >= marked_points.size()) {
      throw ValidationError("identified pair refers to a missing marked point", "/identified_pairs");
    }
    if (i == j) throw ValidationError("identified pair must join distinct points", "/identified_pairs");
    if (marked_points[i].ambient != marked_points[j].ambient) {
      throw ValidationError("identified points '" + marked_points[i].id + "' and '" + marked_points[j].id +
                                "' map to different ambient points",
                            "/identified_pairs");
    }
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal:
      return "equal";
    case Verdict::NotEqual:
      return "not-equal";
    case Verdict::BoundOnly:
      return "bound-only";
  }
  return "unknown";
}

AdjunctionReport adjunction_check(const CurvePresentation& p, const IntersectionOptions& options) {
  p.validate();
  AdjunctionReport report;
  report.virtual_genus = virtual_genus(p.curve);
  report.orbifold_genus = orbifold::orbifold_genus(p.domain);
  bool exact = true;
  for (const auto& [i, j] : p.identified_pairs) {
    const auto& z = p.marked_points[i];
    const auto& w = p.marked_points[j];
    auto c = k_pair(z, w, options);
    report.contributions += c.value;
    report.entries.push_back({"k_pair", "[" + z.id + "," + w.id + "]", z.ambient, c});
  }
  for (const auto& z : p.marked_points) {
    auto c = k_z(z, options);
    exact = exact && c.exact;
    report.contributions += c.value;
    report.entries.push_back({"k_z", z.id, z.ambient, c});
  }
  report.rhs = report.orbifold_genus + report.contributions;
  if (!exact) {
    report.verdict = Verdict::BoundOnly;
    report.bound_holds = report.virtual_genus >= report.rhs;
  } else {
    report.verdict = report.virtual_genus == report.rhs ? Verdict::Equal : Verdict::NotEqual;
    report.bound_holds = report.virtual_genus >= report.rhs;
  }
  return report;
}

bool is_suborbifold(const AdjunctionReport& report) {
  if (report.verdict != Verdict::Equal) return false;
  for (const auto& e : report.entries) {
    if (!e.contribution.value.is_zero()) return false;
  }
  return true;
}

bool is_suborbifold(const CurvePresentation& p, const IntersectionOptions& options) {
  return is_suborbifold(adjunction_check(p, options));
}

IntersectionReport intersection_check(const Rational& pairing, const std::vector<IntersectionPoint>& points,
                                      const IntersectionOptions& options) {
  IntersectionReport report;
  report.pairing = pairing;
  for (const auto& pt : points) {
    auto c = k_int(pt.first, pt.second, options);
    report.total += c.value;
    report.entries.push_back({"k_int", "(" + pt.first.id + "," + pt.second.id + ")", pt.first.ambient, c});
  }
  report.verdict = report.total == report.pairing ? Verdict::Equal : Verdict::NotEqual;
  return report;
}

CurvePresentation coordinate_line(const WeightedProjectivePlane& x) {
  const unsigned d2 = x.weight(2);
  const unsigned d3 = x.weight(3);
  // In the charts at p2 and p3 the first coordinate is z1, so the curve is
  // the second coordinate axis.
  const BranchGerm axis = BranchGerm::monomial(0, 1, 1, 1);
  std::vector<MarkedPointData> marked{
      MarkedPointData::from_germ("z2", d2, x.singular_point(2), axis),
      MarkedPointData::from_germ("z3", d3, x.singular_point(3), axis),
  };
  const auto c = CurveClass::make(x, Rational(x.weight(1)));
  return CurvePresentation{numbers(c), OrbifoldRiemannSurface::sphere({d2, d3}), std::move(marked), {}};
}

CurvePresentation pencil_curve(const WeightedProjectivePlane& x, const CyclotomicElement& c) {
  if (c.is_zero()) throw ValidationError("pencil parameter must be nonzero");
  const unsigned d1 = x.weight(1);
  const unsigned d2 = x.weight(2);
  const unsigned d3 = x.weight(3);
  const BranchGerm branch = BranchGerm::monomial(1, d2, c, d3);
  std::vector<MarkedPointData> marked{MarkedPointData::from_germ("z1", d1, x.singular_point(1), branch)};
  const auto cls = CurveClass::make(x, Rational(Integer(d2) * d3));
  return CurvePresentation{numbers(cls), OrbifoldRiemannSurface::sphere({d1}), std::move(marked), {}};
}

IntersectionPoint pencil_intersection_point(const WeightedProjectivePlane& x, const CyclotomicElement& c,
                                            const CyclotomicElement& c_other) {
  auto first = pencil_curve(x, c).marked_points.front();
  auto second = pencil_curve(x, c_other).marked_points.front();
  first.id = "z";
  second.id = "z'";
  return {std::move(first), std::move(second)};
}

}  // namespace orbicalc::curves
