// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on
// any failure. Usage: orbicalc_acceptance [batch files...]
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orbicalc/cli.hpp"
#include "orbicalc/curves.hpp"
#include "orbicalc/deduce.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/germs.hpp"
#include "orbicalc/moduli.hpp"

using namespace orbicalc;
using exactmath::Integer;
using exactmath::Rational;
using orbifold::WeightedProjectivePlane;

namespace {

struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

using Triple = std::array<unsigned, 3>;

std::vector<Triple> admissible_triples(unsigned d3_max) {
  std::vector<Triple> out;
  for (unsigned c = 4; c <= d3_max; ++c)
    for (unsigned b = 3; b < c; ++b)
      for (unsigned a = 2; a < b; ++a)
        if (WeightedProjectivePlane::admissible(a, b, c)) out.push_back({a, b, c});
  return out;
}

std::string name(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

void sw_vanishing(Check& c) {
  for (const Triple& t : std::vector<Triple>{{2, 3, 5}, {2, 3, 7}, {2, 5, 7}, {3, 4, 5}, {3, 4, 7}, {2, 3, 11}}) {
    const WeightedProjectivePlane x(t[0], t[1], t[2]);
    const auto d = moduli::sw_dimension(moduli::SWInput::weighted_projective(x, t[0]));
    c.expect(d.value == 0, "d(E) != 0 on " + name(t));
    c.expect(d.points.size() == 3 && d.points[0].value == 0, "I1 != 0 on " + name(t));
    for (std::size_t i = 1; i < d.points.size(); ++i) {
      const auto& p = d.points[i];
      c.expect(p.closed.has_value(), "no closed form at " + p.label + " on " + name(t));
      if (!p.closed) continue;
      const Rational expected(Integer(p.order) - 1 - 2 * p.closed->delta, Integer(p.order));
      c.expect(p.value == expected && p.closed->value == expected, "closed form mismatch at " + p.label);
    }
  }
}

void character_sums(Check& c) {
  for (unsigned m = 2; m <= 50; ++m) {
    moduli::CharacterSumEvaluator ev(m);
    for (unsigned a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      for (unsigned b = 1; b < m; ++b) {
        if (std::gcd(b, m) != 1) continue;
        for (unsigned w : {a, b}) {
          try {
            const auto cf = moduli::closed_form(m, a, b, w);
            c.expect(cf && cf->value == ev.evaluate(a, b, w),
                     "m=" + std::to_string(m) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
          } catch (const Error& e) {
            c.expect(false, std::string("direct sum raised ") + e.kind());
          }
        }
      }
    }
  }
}

void delta_identity(Check& c) {
  for (const Triple& t : admissible_triples(60)) {
    const WeightedProjectivePlane x(t[0], t[1], t[2]);
    const orbifold::OrbifoldLineBundle e{x, t[0]};
    std::array<Integer, 4> delta{};
    for (int i : {2, 3}) {
      const auto p = x.singular_point(i);
      const auto cf = moduli::closed_form(p.group_order, p.tangent_weights[0], p.tangent_weights[1],
                                          orbifold::fiber_weight(e, i));
      c.expect(cf.has_value(), "fiber weight not aligned on " + name(t));
      if (cf) delta[i] = cf->delta;
    }
    c.expect(delta[3] * t[1] + delta[2] * t[2] == Integer(t[0]) + Integer(t[1]) * t[2], "identity fails on " + name(t));
  }
}

void adjunction(Check& c) {
  for (const Triple& t : admissible_triples(23)) {
    const WeightedProjectivePlane x(t[0], t[1], t[2]);
    const auto line = curves::adjunction_check(curves::coordinate_line(x));
    c.expect(line.verdict == curves::Verdict::Equal && line.contributions == 0 && curves::is_suborbifold(line),
             "coordinate line on " + name(t));
    const auto pencil = curves::adjunction_check(curves::pencil_curve(x, 1));
    const Rational k(Integer(t[1] - 1) * (t[2] - 1), Integer(2 * t[0]));
    c.expect(pencil.verdict == curves::Verdict::Equal && pencil.contributions == k &&
                 pencil.virtual_genus == pencil.orbifold_genus + k,
             "pencil curve on " + name(t));
  }
  const auto p = curves::adjunction_check(curves::pencil_curve(WeightedProjectivePlane(2, 3, 5), 1));
  c.expect(p.virtual_genus == Rational(9, 4) && p.orbifold_genus == Rational(1, 4) && p.contributions == 2,
           "9/4 = 1/4 + 2 on (2,3,5)");
}

void intersection_formula(Check& c) {
  const WeightedProjectivePlane x(2, 3, 5);
  const auto cls = curves::CurveClass::make(x, 15);
  const auto r = curves::intersection_check(curves::intersection(cls, cls), {curves::pencil_intersection_point(x, 1, 2)});
  c.expect(r.total == Rational(15, 2) && r.pairing == Rational(15, 2) && r.verdict == curves::Verdict::Equal,
           "k at p1 != 15/2");
}

void leading_orders(Check& c) {
  std::mt19937 rng(7);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int pairs = 0, equal_cases = 0;
  while (pairs < 240) {
    // Controlled leading orders with random higher terms.
    auto series = [&](unsigned l) {
      std::string s = std::to_string(pick(1, 9)) + "*t^" + std::to_string(l);
      if (pick(0, 1)) s += " + " + std::to_string(pick(-9, 9)) + "*t^" + std::to_string(l + pick(1, 3));
      return s;
    };
    const unsigned l1 = pick(1, 5), l2 = pick(1, 5), m1 = pick(1, 5), m2 = pick(1, 5);
    const bool monomial = pairs % 3 == 0;
    std::string g1 = "(" + series(l1) + ", " + series(l2) + ")";
    std::string g2 = "(" + series(m1) + ", " + series(m2) + ")";
    if (monomial) {
      g1 = "(" + std::to_string(pick(1, 9)) + "*t^" + std::to_string(l1) + ", " + std::to_string(pick(1, 9)) +
           "*t^" + std::to_string(l2) + ")";
      g2 = "(" + std::to_string(pick(11, 19)) + "*t^" + std::to_string(m1) + ", " + std::to_string(pick(23, 31)) +
           "*t^" + std::to_string(m2) + ")";
    }
    try {
      const auto a = germs::BranchGerm::parse(g1), b = germs::BranchGerm::parse(g2);
      const auto bound = germs::intersection_lower_bound(a.leading_orders(), b.leading_orders());
      const auto value = germs::local_intersection(a, b);
      ++pairs;
      c.expect(bound && value >= *bound, "bound violated for " + g1 + " " + g2);
      if (monomial) {
        c.expect(bound && value == *bound, "no equality for monomial pair " + g1 + " " + g2);
        ++equal_cases;
      }
    } catch (const ValidationError&) {
    } catch (const CommonBranch&) {
    }
  }
  c.expect(equal_cases > 0, "no monomial pairs");
  for (unsigned l1 = 1; l1 <= 12; ++l1)
    for (unsigned l2 = 1; l2 <= 12; ++l2) {
      if (std::gcd(l1, l2) != 1) continue;
      unsigned gaps = 0;
      for (unsigned n = 1; n < l1 * l2; ++n) {
        bool hit = false;
        for (unsigned i = 0; i * l1 <= n && !hit; ++i) hit = (n - i * l1) % l2 == 0;
        gaps += hit ? 0 : 1;
      }
      c.expect(germs::self_intersection_monomial(l1, l2) == gaps && 2 * gaps == (l1 - 1) * (l2 - 1),
               "gap count for (" + std::to_string(l1) + "," + std::to_string(l2) + ")");
    }
}

void index_formula(Check& c) {
  c.expect(moduli::index_dimension({3, {}}).dimension == 4, "smooth sphere dimension != 4");
  using Pairs = std::vector<std::pair<unsigned, unsigned>>;
  c.expect(moduli::fixed_point_weight_pairs(4) == Pairs{{1, 1}}, "pairs(4)");
  c.expect(moduli::fixed_point_weight_pairs(2).empty(), "pairs(2)");
  bool raised = false;
  try {
    moduli::index_dimension({1, {{3, 1, 1}}});
  } catch (const NonIntegralIndex&) {
    raised = true;
  }
  c.expect(raised, "NonIntegralIndex not raised");
}

void pipeline(Check& c) {
  for (const Triple& t : admissible_triples(60)) {
    const WeightedProjectivePlane x(t[0], t[1], t[2]);
    try {
      const auto a = deduce::analyze_canonical_pair(x);
      bool ok = a.survivors.size() == 1;
      if (ok) {
        const auto& s = a.survivors[0];
        ok = s.components.size() == 1 && s.components[0].degree == t[0] && s.components[0].multiplicity == 1 &&
             s.coverage.count(2) && s.coverage.count(3) && !s.coverage.count(1);
      }
      c.expect(ok, "survivor on " + name(t));
      c.expect(a.triple_point.I < 1, "I >= 1 on " + name(t));
      c.expect(a.scan.survivors.empty(), "integrality scan on " + name(t));
      c.expect(a.suborbifold, "certification on " + name(t));
    } catch (const Error& e) {
      c.expect(false, std::string(e.kind()) + " on " + name(t));
    }
  }
  c.expect(deduce::triple_point_test(WeightedProjectivePlane(2, 3, 5)).I == Rational(11, 15), "I(2,3,5)");
}

std::string run_suite(const std::vector<std::string>& files) {
  std::string out;
  for (const auto& f : files) out += cli::dump(cli::batch_file(f).json);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> files(argv + 1, argv + argc);
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"sw-dim vanishes for the degree-d1 bundle", sw_vanishing},
      {"character sums match the closed form for m <= 50", character_sums},
      {"delta identity for d3 <= 60", delta_identity},
      {"adjunction equalities", adjunction},
      {"intersection formula at p1", intersection_formula},
      {"leading-order bound and gap counts", leading_orders},
      {"index formula", index_formula},
      {"canonical pair pipeline for d3 <= 60", pipeline},
      {"batch determinism",
       [&](Check& c) {
         c.expect(!files.empty(), "no batch files given");
         const std::string first = run_suite(files), second = run_suite(files);
         c.expect(!first.empty() && first == second, "reports differ between runs");
       }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("uncaught: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failure.empty();
    failures += ok ? 0 : 1;
    std::printf("%s %zu %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms,
                ok ? "" : ": ", c.failure.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
