#include "doctest.h"
#include "orbicalc/deduce.hpp"
#include "orbicalc/errors.hpp"

using namespace orbicalc;
using namespace orbicalc::deduce;

namespace {
const WeightedProjectivePlane X235(2, 3, 5);

DecompositionHypothesis single(const Integer& e, const Integer& r) {
  return DecompositionHypothesis{e, {Component{e / r, r}}, {}};
}
}  // namespace

TEST_CASE("required points") {
  CHECK(required_points(X235, 2) == std::vector<int>{2, 3});
  CHECK(required_points(X235, 3) == std::vector<int>{1, 3});
  CHECK(required_points(X235, 30).empty());
  CHECK(required_points(X235, 1) == std::vector<int>{1, 2, 3});
}

TEST_CASE("degree integrality") {
  CHECK(degree_integrality_holds(X235, 2));
  CHECK_FALSE(degree_integrality_holds(X235, Rational(15, 2)));
  // r = s + 1/2 would need s even; here s = 10 fails.
  CHECK_FALSE(degree_integrality_holds(X235, Rational(21, 2)));
  const auto scan = degree_integrality_scan(X235, 20, 200);
  CHECK(scan.survivors.empty());
  CHECK(scan.candidates == scan.excluded);
  CHECK(scan.candidates > 0);
}

TEST_CASE("intersection bound filter") {
  const auto v = intersection_bound_filter(X235, single(2, 2), single(3, 3));
  CHECK(v.all_hold);
  CHECK(v.pins_degrees);
  const auto w = intersection_bound_filter(X235, single(2, 1), single(3, 3));
  CHECK_FALSE(w.all_hold);
  CHECK_FALSE(w.pins_degrees);
  const auto same = intersection_bound_filter(X235, single(2, 1), single(3, 1), {{0, 0}});
  REQUIRE(same.pairs.size() == 1);
  CHECK_FALSE(same.pairs[0].applicable);
  const auto pairs = bounded_degree_pairs(X235, 2, 3);
  for (const auto& [r1, r2] : pairs) CHECK(r1 * r2 >= 6);
  CHECK(pairs.size() == 1);
  CHECK(bounded_degree_pairs(X235, 3, 3).size() == 3);
}

TEST_CASE("hypothesis validation") {
  DecompositionHypothesis bad{2, {Component{1, 1}}, {}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  DecompositionHypothesis out_of_range{2, {Component{1, 2}}, {{1, {4}}}};
  CHECK_THROWS_AS(out_of_range.validate(), ValidationError);
}

TEST_CASE("minimal contribution") {
  CHECK(minimal_contribution(X235, {2, 3}) == Rational(1, 3) + Rational(2, 5));
  CHECK(minimal_contribution(X235, {}) == 0);
}

TEST_CASE("triple point test") {
  const auto t = triple_point_test(X235);
  CHECK(t.I == Rational(11, 15));
  CHECK(t.I == t.I_closed);
  CHECK(t.I < t.upper_bound);
  CHECK(t.infeasible);
  CHECK(triple_point_test(WeightedProjectivePlane(2, 3, 7)).I == Rational(5, 7));
  CHECK(triple_point_test(WeightedProjectivePlane(3, 4, 5)).I == Rational(3, 5));
}

TEST_CASE("uniqueness test") {
  const auto u = uniqueness_test(X235);
  CHECK(u.pairing == Rational(2, 15));
  CHECK(u.threshold == Rational(1, 5));
  CHECK(u.unique);
}

TEST_CASE("full analysis on P(2,3,5)") {
  const auto a = analyze_canonical_pair(X235);
  CHECK(a.required_first == std::vector<int>{2, 3});
  CHECK(a.required_second == std::vector<int>{1, 3});
  REQUIRE(a.survivors.size() == 1);
  CHECK(a.survivors[0].components.size() == 1);
  CHECK(a.survivors[0].components[0].degree == 2);
  CHECK(a.survivors[0].components[0].multiplicity == 1);
  CHECK(a.suborbifold);
  CHECK_FALSE(a.trace.empty());
}

TEST_CASE("analysis across small admissible triples") {
  for (unsigned d1 = 2; d1 <= 7; ++d1)
    for (unsigned d2 = d1 + 1; d2 <= 9; ++d2)
      for (unsigned d3 = d2 + 1; d3 <= 11; ++d3) {
        if (!WeightedProjectivePlane::admissible(d1, d2, d3)) continue;
        const auto a = analyze_canonical_pair(WeightedProjectivePlane(d1, d2, d3), {6, 40});
        CHECK(a.survivors.size() == 1);
        CHECK(a.suborbifold);
      }
}
