#include "doctest.h"
#include "orbicalc/errors.hpp"
#include "orbicalc/germs.hpp"

using namespace orbicalc;
using namespace orbicalc::germs;

namespace {
Integer li(const char* a, const char* b) { return local_intersection(BranchGerm::parse(a), BranchGerm::parse(b)); }
}  // namespace

TEST_CASE("germ parsing and printing") {
  const auto g = BranchGerm::parse("(t^3, 2*t^5)");
  CHECK(g.str() == "(t^3, 2*t^5)");
  CHECK(g.is_monomial());
  CHECK_FALSE(g.is_embedded());
  CHECK(BranchGerm::parse("(t, -t^2 + 1/2*t^3)").str() == "(t, -t^2 + 1/2*t^3)");
  CHECK(BranchGerm::parse("(zeta(3)^2*t, 0)").is_embedded());
  CHECK(parse_coefficient("-3/2*zeta(5)^2") == CyclotomicElement::zeta(5, 2) * Rational(-3, 2));
}

TEST_CASE("germ validation") {
  CHECK_THROWS_AS(BranchGerm::parse("(0, 0)"), ValidationError);
  CHECK_THROWS_AS(BranchGerm::parse("(1 + t, t^2)"), ValidationError);
  CHECK_THROWS_AS(BranchGerm::parse("(t^2, t^4)"), ValidationError);
  CHECK_THROWS_AS(BranchGerm::parse("(t, t^2"), ValidationError);
  CHECK_THROWS_AS(BranchGerm::parse("(t^2 - t^3, t^3 - t^4)"), ValidationError);
}

TEST_CASE("local intersections frozen from the resultant oracle") {
  CHECK(li("(t, t^2)", "(t, -t^2)") == 2);
  CHECK(li("(t^3, t^5)", "(t^3, 2*t^5)") == 15);
  CHECK(li("(t, t^5)", "(t, t^7)") == 5);
  CHECK(li("(t^2, t^3)", "(t^3, t^2)") == 4);
  CHECK(li("(t^2, t^3 + t^4)", "(t^2, -t^3)") == 7);
  CHECK(li("(t, 0)", "(0, t)") == 1);
}

TEST_CASE("local intersection is symmetric") {
  CHECK(li("(t^2, t^3 + t^4)", "(t^2, -t^3)") == li("(t^2, -t^3)", "(t^2, t^3 + t^4)"));
  CHECK(li("(t^3, t^5)", "(t^2, t^7)") == li("(t^2, t^7)", "(t^3, t^5)"));
}

TEST_CASE("identical branches share a component") {
  CHECK_THROWS_AS(li("(t^3, t^5)", "(t^3, t^5)"), CommonBranch);
  // A reparametrization t -> -t of (t^2, t^3) is the same branch.
  CHECK_THROWS_AS(li("(t^2, t^3)", "(t^2, -t^3)"), CommonBranch);
}

TEST_CASE("truncation override") {
  IntersectionOptions opts;
  opts.truncation = 10;
  CHECK_THROWS_AS(local_intersection(BranchGerm::parse("(t^3, t^5)"), BranchGerm::parse("(t^3, 2*t^5)"), opts),
                  CommonBranch);
  opts.truncation = 16;
  CHECK(local_intersection(BranchGerm::parse("(t^3, t^5)"), BranchGerm::parse("(t^3, 2*t^5)"), opts) == 15);
}

TEST_CASE("self-intersection via semigroup gaps") {
  // gaps(3, 5) = {1, 2, 4, 7}; gaps(2, 3) = {1}.
  CHECK(self_intersection_monomial(3, 5) == 4);
  CHECK(self_intersection_monomial(2, 3) == 1);
  CHECK(self_intersection_monomial(1, 9) == 0);
  CHECK_THROWS_AS(self_intersection_monomial(4, 6), NotCoprime);
  const auto exact = self_intersection(BranchGerm::parse("(t^3, t^5)"));
  CHECK(exact.exact);
  CHECK(exact.value == 4);
  const auto bound = self_intersection(BranchGerm::parse("(t^2, t^3 + t^4)"));
  CHECK_FALSE(bound.exact);
  CHECK(bound.value == 1);
  CHECK(self_intersection(BranchGerm::parse("(t, t^5)")).value == 0);
}

TEST_CASE("leading order bounds") {
  CHECK(self_intersection_lower_bound({3, 5}) == 4);
  CHECK(self_intersection_lower_bound({1, std::nullopt}) == 0);
  CHECK(intersection_lower_bound({3, 5}, {3, 5}) == Integer(15));
  CHECK(intersection_lower_bound({1, std::nullopt}, {std::nullopt, 1}) == Integer(1));
  CHECK_FALSE(intersection_lower_bound({1, std::nullopt}, {1, std::nullopt}).has_value());
}

TEST_CASE("orbits under cyclic groups") {
  // (t^3, c t^5) under Z_2 with weights (3, 5) = (1, 1) mod 2 is fixed.
  const auto fixed = orbit_branches(BranchGerm::parse("(t^3, t^5)"), 2, {1, 1});
  CHECK(fixed.stabilizer_order == 2);
  CHECK(fixed.branches.size() == 1);
  // The axis (t, 0) under Z_3 acting with weights (1, 2) is fixed.
  CHECK(orbit_branches(BranchGerm::parse("(t, 0)"), 3, {1, 2}).stabilizer_order == 3);
  // (t, t) under Z_3 with weights (1, 2) moves: three distinct branches.
  const auto moving = orbit_branches(BranchGerm::parse("(t, t)"), 3, {1, 2});
  CHECK(moving.stabilizer_order == 1);
  REQUIRE(moving.branches.size() == 3);
  CHECK(local_intersection(moving.branches[0], moving.branches[1]) == 1);
  CHECK_THROWS_AS(orbit_branches(BranchGerm::parse("(t, t)"), 4, {2, 2}), ValidationError);
}
