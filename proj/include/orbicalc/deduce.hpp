#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbicalc/curves.hpp"
#include "orbicalc/exactmath/rational.hpp"
#include "orbicalc/orbifold.hpp"

namespace orbicalc::deduce {

using exactmath::Integer;
using exactmath::Rational;
using orbifold::WeightedProjectivePlane;

/// One step of a derivation: which rule fired, on what, with what outcome,
/// and the exact numbers it used (as strings, in insertion order).
struct RuleFiring {
  std::string rule;
  std::string subject;
  /// "closed", "survives", "holds", "fails", "infeasible", ...
  std::string outcome;
  std::vector<std::pair<std::string, std::string>> values;
};

using Trace = std::vector<RuleFiring>;

/// Singular points (1-based indices) whose isotropy acts nontrivially on the
/// fiber of E0^e, i.e. e mod d_i != 0. Every curve set representing c1(E)
/// must pass through them.
std::vector<int> required_points(const WeightedProjectivePlane& x, const Integer& e);

/// r^2 - (d1 + d2 + d3) r is an integer.
bool degree_integrality_holds(const WeightedProjectivePlane& x, const Rational& r);

struct IntegralityScan {
  unsigned q_max = 0;
  unsigned p_max = 0;
  /// Reduced fractions p/q with 2 <= q <= q_max and 1 <= p <= p_max.
  Integer candidates;
  Integer excluded;
  /// Candidates passing the integrality test; empty when the claim holds.
  std::vector<Rational> survivors;
};

IntegralityScan degree_integrality_scan(const WeightedProjectivePlane& x, unsigned q_max, unsigned p_max);

struct Component {
  Integer multiplicity;
  Integer degree;
};

/// c1(E) = sum n_a PD(C_a) with the singular points each C_a passes through.
struct DecompositionHypothesis {
  Integer target_degree;
  std::vector<Component> components;
  /// Singular point index -> indices of the components containing it.
  std::map<int, std::vector<std::size_t>> coverage;

  /// Checks sum n_a r_a = e, positivity and coverage indices.
  void validate() const;
};

struct PairVerdict {
  std::size_t first;
  std::size_t second;
  Integer r1;
  Integer r2;
  /// False when the pair was declared to be the same curve.
  bool applicable;
  bool holds;
};

struct IntersectionBoundVerdict {
  std::vector<PairVerdict> pairs;
  bool all_hold = true;
  /// All pairs hold and force r1 = e1 = d1, r2 = e2 = d2.
  bool pins_degrees = false;
};

/// Distinct curves C1, C2 meet at some p with |G_p| <= d3, so
/// r1 r2 / (d1 d2 d3) >= 1/d3, i.e. r1 r2 >= d1 d2. Pairs listed in
/// `same_curve` are flagged not applicable.
IntersectionBoundVerdict intersection_bound_filter(const WeightedProjectivePlane& x,
                                                   const DecompositionHypothesis& first,
                                                   const DecompositionHypothesis& second,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& same_curve = {});

/// Degree pairs (r1, r2) with 1 <= r_i <= max_i that satisfy r1 r2 >= d1 d2.
std::vector<std::pair<Integer, Integer>> bounded_degree_pairs(const WeightedProjectivePlane& x, const Integer& max1,
                                                              const Integer& max2);

/// Least possible right-hand side of the adjunction formula for a curve
/// through the given singular points: each contributes at least
/// 1/2 - 1/(2 d_i), whether the domain point has full isotropy (orbifold
/// genus term) or a proper subgroup (k_z bound).
Rational minimal_contribution(const WeightedProjectivePlane& x, const std::vector<int>& points);

struct TriplePointTest {
  /// I = 2(g(C0) - 1) + 1/d1 + 1/d2 + 1/d3 for deg C0 = 1.
  Rational I;
  /// The same quantity as 1/d1 + (d2 + d3 - 1)(d1 - 1)/(d1 d2 d3).
  Rational I_closed;
  /// 1/d1 + (d2 + d3 - 1)/(d2 d3), which exceeds I.
  Rational upper_bound;
  /// g(C0) minus the minimal contribution of p1, p2, p3; I - 1 is twice this.
  Rational genus_margin;
  bool threshold_ok;
  bool infeasible;
};

TriplePointTest triple_point_test(const WeightedProjectivePlane& x);

struct UniquenessTest {
  /// C1 . C1' = d1^2 / (d1 d2 d3) for two degree-d1 curves.
  Rational pairing;
  /// 1/d3, the least a common point can contribute.
  Rational threshold;
  bool unique;
};

UniquenessTest uniqueness_test(const WeightedProjectivePlane& x);

struct CanonicalPairAnalysis {
  std::vector<int> required_first;
  std::vector<int> required_second;
  IntegralityScan scan;
  TriplePointTest triple_point;
  UniquenessTest uniqueness;
  std::vector<DecompositionHypothesis> survivors;
  curves::AdjunctionReport certification;
  bool suborbifold = false;
  Trace trace;
};

struct AnalysisOptions {
  unsigned scan_q_max = 20;
  unsigned scan_p_max = 200;
};

/// Case analysis for the bundles of degree d1 and d2 on P(d1, d2, d3):
/// every component type of the degree-d1 curve set is either closed by a
/// rule or survives. Throws IncompleteDerivation if a case stays open.
CanonicalPairAnalysis analyze_canonical_pair(const WeightedProjectivePlane& x, const AnalysisOptions& options = {});

}  // namespace orbicalc::deduce
