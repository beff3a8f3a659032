#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbicalc/exactmath/rational.hpp"
#include "orbicalc/germs.hpp"
#include "orbicalc/orbifold.hpp"

namespace orbicalc::curves {

using exactmath::CyclotomicElement;
using exactmath::Integer;
using exactmath::Rational;
using germs::BranchGerm;
using germs::IntersectionOptions;
using orbifold::CyclicSingularPoint;
using orbifold::OrbifoldRiemannSurface;
using orbifold::WeightedProjectivePlane;

/// A curve class on a weighted projective plane: degree r against E0 and
/// multiplicity m_C (always 1 there, since the singularities are isolated).
struct CurveClass {
  WeightedProjectivePlane ambient;
  Rational degree;
  unsigned multiplicity = 1;

  static CurveClass make(const WeightedProjectivePlane& ambient, const Rational& degree, unsigned multiplicity = 1);
};

/// The two pairings the virtual genus needs. Computed from a CurveClass on a
/// weighted projective plane, or supplied directly for a general orbifold.
struct CurveNumbers {
  Rational self_intersection;
  /// c1(TX) . C
  Rational chern_pairing;
  unsigned multiplicity = 1;
};

CurveNumbers numbers(const CurveClass& c);

/// Pairing of the class of degree a with C: a r / (d1 d2 d3 m_C).
Rational pairing(const Rational& class_degree, const CurveClass& c);

/// C . C' = r r' / (d1 d2 d3 m_C m_C').
Rational intersection(const CurveClass& c1, const CurveClass& c2);

/// g(C) = (C.C - c1(TX).C) / 2 + 1/m_C.
Rational virtual_genus(const CurveNumbers& c);
Rational virtual_genus(const CurveClass& c);

/// Local data of a parametrization at a marked point z: the set of local
/// representatives at p = f(z) and the order of Im rho_z.
struct MarkedPointData {
  std::string id;
  /// Order m_z of the isotropy at z in the domain.
  unsigned domain_order = 1;
  /// Label of the ambient point, "smooth" at smooth points.
  std::string ambient;
  /// |G_p|; 1 at smooth points.
  unsigned group_order = 1;
  std::vector<BranchGerm> branches;
  unsigned stabilizer_order = 1;

  /// Checks branches.size() * stabilizer_order == group_order.
  static MarkedPointData make(std::string id, unsigned domain_order, std::string ambient, unsigned group_order,
                              std::vector<BranchGerm> branches, unsigned stabilizer_order);

  /// Branches are the orbit of `germ` under the point's isotropy group.
  static MarkedPointData from_germ(std::string id, unsigned domain_order, const CyclicSingularPoint& point,
                                   const BranchGerm& germ);

  /// Point of the domain mapping to a smooth point of X.
  static MarkedPointData smooth(std::string id, std::vector<BranchGerm> branches);
};

/// A contribution value. When `exact` is false the value is a lower bound
/// (some self-intersection was not computed exactly).
struct Contribution {
  Rational value;
  bool exact = true;

  /// Throws InexactSelfIntersection if only a bound is known.
  const Rational& require_exact() const;
};

/// k_z = (sum_a C_a.C_a + sum_{a,b} C_a.C_b) / (2 |G_z|); the double sum
/// includes a = b, where C_a.C_a is the local self-intersection.
Contribution k_z(const MarkedPointData& z, const IntersectionOptions& options = {});

/// k_[z,z'] = sum_{a,a'} C_{z,a}.C_{z',a'} / |G|, for two points of one
/// curve mapping to the same ambient point.
Contribution k_pair(const MarkedPointData& z, const MarkedPointData& other, const IntersectionOptions& options = {});

/// k_(z,z') for points of two distinct curves; same normalization as k_pair.
Contribution k_int(const MarkedPointData& z, const MarkedPointData& other, const IntersectionOptions& options = {});

/// (1/(2 m_z)) (|G_p|/m_z - 1), the least k_z can be when Im rho_z is a
/// proper subgroup; attained iff all representatives are embedded and
/// pairwise transverse.
Rational k_z_lower_bound(unsigned domain_order, unsigned group_order);

struct CurvePresentation {
  CurveNumbers curve;
  OrbifoldRiemannSurface domain;
  std::vector<MarkedPointData> marked_points;
  /// Indices into marked_points of pairs z != z' with f(z) = f(z').
  std::vector<std::pair<std::size_t, std::size_t>> identified_pairs;

  /// Checks pair indices and that paired points share an ambient point.
  void validate() const;
};

struct LedgerEntry {
  /// "k_z", "k_pair" or "k_int".
  std::string kind;
  std::string points;
  std::string ambient;
  Contribution contribution;
};

enum class Verdict { Equal, NotEqual, BoundOnly };

std::string to_string(Verdict v);

struct AdjunctionReport {
  Rational virtual_genus;
  Rational orbifold_genus;
  Rational contributions;
  /// orbifold_genus + contributions.
  Rational rhs;
  Verdict verdict = Verdict::Equal;
  /// With a BoundOnly verdict: whether lhs >= rhs still holds.
  bool bound_holds = true;
  std::vector<LedgerEntry> entries;
};

/// Evaluates both sides of g(C) = g_Sigma + sum k_[z,z'] + sum k_z. All
/// contributing points must be marked; unmarked points count as zero.
AdjunctionReport adjunction_check(const CurvePresentation& p, const IntersectionOptions& options = {});

/// True iff the adjunction ledger is exact and every contribution vanishes.
bool is_suborbifold(const AdjunctionReport& report);
bool is_suborbifold(const CurvePresentation& p, const IntersectionOptions& options = {});

struct IntersectionPoint {
  MarkedPointData first;
  MarkedPointData second;
};

struct IntersectionReport {
  Rational pairing;
  Rational total;
  Verdict verdict = Verdict::Equal;
  std::vector<LedgerEntry> entries;
};

/// Compares C.C' with the sum of k_(z,z') over the supplied common points.
IntersectionReport intersection_check(const Rational& pairing, const std::vector<IntersectionPoint>& points,
                                      const IntersectionOptions& options = {});

// Standard curves on P(d1, d2, d3).

/// {z1 = 0}: degree d1, a sphere through p2 and p3 with orbifold points of
/// orders d2, d3 and the coordinate axis as local representative.
CurvePresentation coordinate_line(const WeightedProjectivePlane& x);

/// {a z2^d3 + b z3^d2 = 0}: degree d2 d3, a sphere with one orbifold point
/// of order d1 over p1, where the branch is (t^d2, c t^d3), c^d2 = -a/b.
CurvePresentation pencil_curve(const WeightedProjectivePlane& x, const CyclotomicElement& c);

/// Marked data of two pencil members at p1.
IntersectionPoint pencil_intersection_point(const WeightedProjectivePlane& x, const CyclotomicElement& c,
                                            const CyclotomicElement& c_other);

}  // namespace orbicalc::curves
