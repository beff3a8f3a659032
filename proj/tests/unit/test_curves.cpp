#include "doctest.h"
#include "orbicalc/curves.hpp"
#include "orbicalc/errors.hpp"

using namespace orbicalc;
using namespace orbicalc::curves;

namespace {
const WeightedProjectivePlane X235(2, 3, 5);
BranchGerm germ(const char* text) { return BranchGerm::parse(text); }
}  // namespace

TEST_CASE("pairings on P(2,3,5)") {
  const auto c15 = CurveClass::make(X235, 15);
  CHECK(intersection(c15, c15) == Rational(15, 2));
  CHECK(pairing(1, CurveClass::make(X235, 1)) == Rational(1, 30));
  CHECK(pairing(0, c15) == 0);
  CHECK_THROWS_AS(CurveClass::make(X235, 1, 2), ValidationError);
}

TEST_CASE("virtual genus") {
  CHECK(virtual_genus(CurveClass::make(X235, 2)) == Rational(11, 15));
  CHECK(virtual_genus(CurveClass::make(X235, 15)) == Rational(9, 4));
  CHECK(virtual_genus(CurveClass::make(X235, 0)) == 1);
  // A line in the projective plane: C.C = 1, c1.C = 3.
  CHECK(virtual_genus(CurveNumbers{1, 3, 1}) == 0);
  // A smooth cubic: C.C = 9, c1.C = 9.
  CHECK(virtual_genus(CurveNumbers{9, 9, 1}) == 1);
}

TEST_CASE("k_z on sample configurations") {
  CHECK(k_z(MarkedPointData::smooth("z", {germ("(t, 0)")})).value == 0);
  const auto cusp = MarkedPointData::from_germ("z", 2, X235.singular_point(1), germ("(t^3, t^5)"));
  CHECK(cusp.stabilizer_order == 2);
  CHECK(k_z(cusp).value == 2);
  const auto cross = MarkedPointData::make("z", 1, "q", 2, {germ("(t, 0)"), germ("(0, t)")}, 1);
  CHECK(k_z(cross).value == Rational(1, 2));
  CHECK(k_z(cross).value == k_z_lower_bound(1, 2));
  const auto inexact = MarkedPointData::smooth("z", {germ("(t^2, t^3 + t^4)")});
  CHECK_FALSE(k_z(inexact).exact);
  CHECK_THROWS_AS(k_z(inexact).require_exact(), InexactSelfIntersection);
}

TEST_CASE("k_pair and k_int") {
  const auto a = MarkedPointData::smooth("z", {germ("(t, 0)")});
  const auto b = MarkedPointData::smooth("w", {germ("(0, t)")});
  CHECK(k_pair(a, b).value == 1);
  const auto c = MarkedPointData::smooth("z", {germ("(t, t^2)")});
  const auto d = MarkedPointData::smooth("w", {germ("(t, -t^2)")});
  CHECK(k_pair(c, d).value == 2);
  const auto e = MarkedPointData::smooth("z", {germ("(t, t^7)")});
  const auto f = MarkedPointData::smooth("w", {germ("(t, t^5)")});
  CHECK(k_int(e, f).value == 5);
  const auto p = MarkedPointData::make("z", 1, "q", 2, {germ("(t, 0)"), germ("(-t, 0)")}, 1);
  CHECK_THROWS_AS(MarkedPointData::make("z", 1, "q", 2, {germ("(t, 0)")}, 1), ValidationError);
  (void)p;
  CHECK_THROWS_AS(k_pair(a, MarkedPointData::from_germ("w", 2, X235.singular_point(1), germ("(t, 0)"))),
                  ValidationError);
}

TEST_CASE("coordinate line is an embedded suborbifold") {
  const auto report = adjunction_check(coordinate_line(X235));
  CHECK(report.virtual_genus == Rational(11, 15));
  CHECK(report.orbifold_genus == Rational(11, 15));
  CHECK(report.contributions == 0);
  CHECK(report.verdict == Verdict::Equal);
  CHECK(is_suborbifold(report));
}

TEST_CASE("pencil curve has one singular point") {
  const auto report = adjunction_check(pencil_curve(X235, 1));
  CHECK(report.virtual_genus == Rational(9, 4));
  CHECK(report.orbifold_genus == Rational(1, 4));
  CHECK(report.contributions == 2);
  CHECK(report.verdict == Verdict::Equal);
  CHECK_FALSE(is_suborbifold(report));
  // The parameter may be any nonzero cyclotomic number.
  CHECK(adjunction_check(pencil_curve(X235, CyclotomicElement::zeta(3))).verdict == Verdict::Equal);
  CHECK_THROWS_AS(pencil_curve(X235, 0), ValidationError);
}

TEST_CASE("two pencil members meet only at p1") {
  const auto point = pencil_intersection_point(X235, 1, 2);
  const auto c = CurveClass::make(X235, 15);
  const auto report = intersection_check(intersection(c, c), {point});
  CHECK(report.total == Rational(15, 2));
  CHECK(report.verdict == Verdict::Equal);
}

TEST_CASE("adjunction with a node at a smooth point") {
  // A nodal cubic in the projective plane: a sphere with two points over
  // the node, each carrying one embedded branch.
  CurvePresentation p{CurveNumbers{9, 9, 1},
                      OrbifoldRiemannSurface::sphere(),
                      {MarkedPointData::smooth("z", {germ("(t, 0)")}), MarkedPointData::smooth("w", {germ("(0, t)")})},
                      {{0, 1}}};
  const auto report = adjunction_check(p);
  CHECK(report.contributions == 1);
  CHECK(report.verdict == Verdict::Equal);
  CHECK_FALSE(is_suborbifold(report));
  // An extra marked smooth embedded point changes nothing.
  p.marked_points.push_back(MarkedPointData::smooth("u", {germ("(t, t^2)")}));
  CHECK(adjunction_check(p).verdict == Verdict::Equal);
  p.identified_pairs.push_back({0, 7});
  CHECK_THROWS_AS(adjunction_check(p), ValidationError);
}

TEST_CASE("a cuspidal cubic with an inexact branch is bound-only") {
  CurvePresentation p{CurveNumbers{9, 9, 1},
                      OrbifoldRiemannSurface::sphere(),
                      {MarkedPointData::smooth("z", {germ("(t^2, t^3 + t^4)")})},
                      {}};
  const auto report = adjunction_check(p);
  CHECK(report.verdict == Verdict::BoundOnly);
  CHECK(report.bound_holds);
}
