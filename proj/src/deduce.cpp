#include "orbicalc/deduce.hpp"

#include <algorithm>
#include <numeric>

#include "orbicalc/errors.hpp"

namespace orbicalc::deduce {

namespace {

std::string point_list(const std::vector<int>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += "p" + std::to_string(points[i]);
  }
  return out + "}";
}

std::string str(const Integer& v) { return v.get_str(); }

}  // namespace

std::vector<int> required_points(const WeightedProjectivePlane& x, const Integer& e) {
  std::vector<int> out;
  for (int i = 1; i <= 3; ++i) {
    if (e % x.weight(i) != 0) out.push_back(i);
  }
  return out;
}

bool degree_integrality_holds(const WeightedProjectivePlane& x, const Rational& r) {
  return (r * r - r * Rational(x.weight_sum())).is_integer();
}

IntegralityScan degree_integrality_scan(const WeightedProjectivePlane& x, unsigned q_max, unsigned p_max) {
  if (q_max < 2) throw ValidationError("q_max must be at least 2", "/q_max");
  IntegralityScan scan{q_max, p_max, 0, 0, {}};
  const Integer s(x.weight_sum());
  Integer n;
  for (unsigned q = 2; q <= q_max; ++q) {
    const Integer q2 = Integer(q) * q;
    const Integer sq = s * q;
    for (unsigned p = 1; p <= p_max; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++scan.candidates;
      // (p/q)^2 - s p/q is an integer iff q^2 divides p (p - s q).
      n = Integer(p) * (Integer(p) - sq);
      if (mpz_divisible_p(n.get_mpz_t(), q2.get_mpz_t())) {
        scan.survivors.emplace_back(Integer(p), Integer(q));
      } else {
        ++scan.excluded;
      }
    }
  }
  return scan;
}

void DecompositionHypothesis::validate() const {
  Integer total = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (c.multiplicity < 1 || c.degree < 1) {
      throw ValidationError("component multiplicity and degree must be positive",
                            "/components/" + std::to_string(i));
    }
    total += c.multiplicity * c.degree;
  }
  if (total != target_degree) {
    throw ValidationError("sum of n_a r_a is " + str(total) + ", expected " + str(target_degree), "/components");
  }
  for (const auto& [point, indices] : coverage) {
    if (point < 1 || point > 3) throw ValidationError("coverage refers to an unknown singular point", "/coverage");
    for (auto i : indices) {
      if (i >= components.size()) throw ValidationError("coverage refers to a missing component", "/coverage");
    }
  }
}

IntersectionBoundVerdict intersection_bound_filter(const WeightedProjectivePlane& x,
                                                   const DecompositionHypothesis& first,
                                                   const DecompositionHypothesis& second,
                                                   const std::vector<std::pair<std::size_t, std::size_t>>& same_curve) {
  first.validate();
  second.validate();
  const Integer bound = Integer(x.weight(1)) * x.weight(2);
  IntersectionBoundVerdict verdict;
  bool pinned = true;
  for (std::size_t i = 0; i < first.components.size(); ++i) {
    for (std::size_t j = 0; j < second.components.size(); ++j) {
      const Integer& r1 = first.components[i].degree;
      const Integer& r2 = second.components[j].degree;
      const bool applicable = std::find(same_curve.begin(), same_curve.end(), std::make_pair(i, j)) == same_curve.end();
      const bool holds = !applicable || r1 * r2 >= bound;
      verdict.pairs.push_back({i, j, r1, r2, applicable, holds});
      verdict.all_hold = verdict.all_hold && holds;
      if (applicable) {
        pinned = pinned && r1 == first.target_degree && r2 == second.target_degree && r1 == x.weight(1) &&
                 r2 == x.weight(2);
      }
    }
  }
  verdict.pins_degrees = verdict.all_hold && pinned &&
                         std::any_of(verdict.pairs.begin(), verdict.pairs.end(), [](auto& p) { return p.applicable; });
  return verdict;
}

std::vector<std::pair<Integer, Integer>> bounded_degree_pairs(const WeightedProjectivePlane& x, const Integer& max1,
                                                              const Integer& max2) {
  const Integer bound = Integer(x.weight(1)) * x.weight(2);
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer r1 = 1; r1 <= max1; ++r1) {
    for (Integer r2 = 1; r2 <= max2; ++r2) {
      if (r1 * r2 >= bound) out.emplace_back(r1, r2);
    }
  }
  return out;
}

Rational minimal_contribution(const WeightedProjectivePlane& x, const std::vector<int>& points) {
  Rational total;
  for (int i : points) total += Rational(1, 2) - Rational(Integer(1), Integer(2 * x.weight(i)));
  return total;
}

TriplePointTest triple_point_test(const WeightedProjectivePlane& x) {
  const Integer d1 = x.weight(1), d2 = x.weight(2), d3 = x.weight(3);
  const Rational volume(x.volume());
  const auto line = curves::CurveClass::make(x, Rational(1));
  const Rational genus = curves::virtual_genus(line);
  TriplePointTest t;
  t.I = 2 * (genus - 1) + Rational(Integer(1), d1) + Rational(Integer(1), d2) + Rational(Integer(1), d3);
  t.I_closed = Rational(Integer(1), d1) + Rational((d2 + d3 - 1) * (d1 - 1)) / volume;
  if (t.I != t.I_closed) throw std::logic_error("triple-point expressions disagree");
  t.upper_bound = Rational(Integer(1), d1) + Rational(d2 + d3 - 1, d2 * d3);
  t.genus_margin = genus - minimal_contribution(x, {1, 2, 3});
  if (t.I - 1 != 2 * t.genus_margin) throw std::logic_error("triple-point threshold disagrees with genus margin");
  t.threshold_ok = t.I >= 1;
  t.infeasible = !t.threshold_ok || !(t.upper_bound > t.I);
  return t;
}

UniquenessTest uniqueness_test(const WeightedProjectivePlane& x) {
  const Integer d1 = x.weight(1);
  UniquenessTest u{Rational(d1 * d1) / Rational(x.volume()), Rational(Integer(1), Integer(x.weight(3))), false};
  u.unique = u.pairing < u.threshold;
  return u;
}

CanonicalPairAnalysis analyze_canonical_pair(const WeightedProjectivePlane& x, const AnalysisOptions& options) {
  const unsigned d1 = x.weight(1), d2 = x.weight(2);
  const Integer e1 = d1, e2 = d2;
  CanonicalPairAnalysis a;
  Trace& trace = a.trace;

  a.required_first = required_points(x, e1);
  a.required_second = required_points(x, e2);
  trace.push_back({"fiber-coverage", "E1", "required", {{"degree", str(e1)}, {"points", point_list(a.required_first)}}});
  trace.push_back({"fiber-coverage", "E2", "required", {{"degree", str(e2)}, {"points", point_list(a.required_second)}}});

  a.scan = degree_integrality_scan(x, options.scan_q_max, options.scan_p_max);
  trace.push_back({"degree-integrality",
                   "r = p/q",
                   a.scan.survivors.empty() ? "holds" : "fails",
                   {{"q_max", std::to_string(a.scan.q_max)},
                    {"p_max", std::to_string(a.scan.p_max)},
                    {"candidates", str(a.scan.candidates)},
                    {"excluded", str(a.scan.excluded)}}});

  a.triple_point = triple_point_test(x);
  a.uniqueness = uniqueness_test(x);

  // Component types (n, r) of the degree-d1 curve set, ordered by (r, n).
  std::vector<Integer> surviving_degrees;
  const Integer bound = Integer(d1) * d2;
  for (unsigned r = 1; r <= d1; ++r) {
    for (unsigned n = 1; n * r <= d1; ++n) {
      const std::string subject = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      // Some curve of the degree-d2 set differs from C: the best partner
      // has degree d2.
      const bool distinct_open = Integer(r) * d2 >= bound;
      trace.push_back({"intersection-bound",
                       subject + " vs distinct E2 curve",
                       distinct_open ? "survives" : "closed",
                       {{"max r1*r2", str(Integer(r) * d2)}, {"d1*d2", str(bound)}}});
      // The degree-d2 set is a multiple of C, so every other E1 component
      // is distinct from it and closed above unless r = d1. Hence E1 = n C
      // and r divides both d1 and d2.
      const bool shared_possible = n * r == d1 && d2 % r == 0;
      std::string shared_outcome = "closed";
      if (shared_possible) {
        // C passes through the points required by both bundles, so through
        // p1, p2, p3, and has degree 1.
        shared_outcome = a.triple_point.infeasible ? "closed" : "open";
        trace.push_back({"triple-point",
                         subject + " shared with E2",
                         a.triple_point.infeasible ? "infeasible" : "feasible",
                         {{"I", a.triple_point.I.str()},
                          {"upper bound", a.triple_point.upper_bound.str()},
                          {"genus margin", a.triple_point.genus_margin.str()}}});
      } else {
        trace.push_back({"common-divisor",
                         subject + " shared with E2",
                         "closed",
                         {{"n*r", std::to_string(n * r)}, {"d1", std::to_string(d1)}, {"d2", std::to_string(d2)}}});
      }
      if (shared_outcome == "open") {
        throw IncompleteDerivation("case " + subject + " shared with the degree-d2 curve is neither closed nor surviving");
      }
      if (distinct_open) {
        if (n != 1 || r != d1) {
          throw IncompleteDerivation("case " + subject + " passes the intersection bound but is not n=1 r=d1");
        }
        surviving_degrees.push_back(r);
      }
    }
  }
  if (surviving_degrees.empty()) throw IncompleteDerivation("no component type survives for the degree-d1 bundle");

  // The sole surviving type fills the whole degree, so the decomposition is
  // a single curve carrying every required point. Decide which further
  // singular points it can pass through.
  const Rational genus = curves::virtual_genus(curves::CurveClass::make(x, Rational(e1)));
  std::vector<int> coverage;
  for (int extra = 1; extra <= 3; ++extra) {
    if (std::find(a.required_first.begin(), a.required_first.end(), extra) != a.required_first.end()) continue;
    auto with = a.required_first;
    with.push_back(extra);
    std::sort(with.begin(), with.end());
    const Rational needed = minimal_contribution(x, with);
    const bool feasible = needed <= genus;
    trace.push_back({"min-contribution",
                     "degree-d1 curve through " + point_list(with),
                     feasible ? "survives" : "closed",
                     {{"g(C)", genus.str()}, {"least rhs", needed.str()}}});
    if (feasible) {
      throw IncompleteDerivation("cannot decide whether the degree-d1 curve passes through p" + std::to_string(extra));
    }
  }
  coverage = a.required_first;
  const Rational needed = minimal_contribution(x, coverage);
  if (needed > genus) throw IncompleteDerivation("required points exceed the virtual genus of the degree-d1 curve");

  DecompositionHypothesis survivor{e1, {{1, e1}}, {}};
  for (int p : coverage) survivor.coverage[p] = {0};
  survivor.validate();
  a.survivors.push_back(survivor);

  trace.push_back({"uniqueness",
                   "two degree-d1 curves",
                   a.uniqueness.unique ? "unique" : "not unique",
                   {{"C1.C1'", a.uniqueness.pairing.str()}, {"1/d3", a.uniqueness.threshold.str()}}});
  if (!a.uniqueness.unique) throw IncompleteDerivation("uniqueness of the degree-d1 curve does not follow");

  const auto presentation = curves::coordinate_line(x);
  a.certification = curves::adjunction_check(presentation);
  a.suborbifold = curves::is_suborbifold(a.certification);
  trace.push_back({"adjunction",
                   "degree-d1 sphere",
                   a.suborbifold ? "embedded suborbifold" : "not a suborbifold",
                   {{"g(C)", a.certification.virtual_genus.str()},
                    {"g_Sigma", a.certification.orbifold_genus.str()},
                    {"contributions", a.certification.contributions.str()}}});
  return a;
}

}  // namespace orbicalc::deduce
