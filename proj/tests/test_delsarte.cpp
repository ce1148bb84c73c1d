#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "lpb/delsarte.hpp"

using namespace lpb;

TEST_CASE("builder argument validation") {
  CHECK_THROWS_AS(build_primal(4, 5, Mode::MinDistance), std::domain_error);
  CHECK_THROWS_AS(build_primal(4, 0, Mode::MinDistance), std::domain_error);
  CHECK_THROWS_AS(build_dual(4, 5, Mode::AlmostBalanced), std::domain_error);
}

TEST_CASE("primal structure and solve") {
  KrawtchoukTable t = build_table(16);
  LpProblem p = build_primal(16, 8, Mode::AlmostBalanced, t);
  CHECK(p.num_vars == 17);
  CHECK(p.rows.size() == 17);
  // fixings: a_0 = 1, zeros on 1..7 and 9..16
  CHECK(p.fixed.size() == 16);
  LpSolution sol = solve_exact(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == 16);
}

TEST_CASE("min-distance primal with d = 1 has no zero fixings and value 2^n") {
  for (unsigned long n = 2; n <= 10; ++n) {
    LpProblem p = build_primal(n, 1, Mode::MinDistance);
    CHECK(p.fixed.size() == 1);  // only a_0 = 1
    LpSolution sol = solve_exact(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == Rational(pow2(n)));
    // the binomial distribution itself is the optimal point
    std::vector<Rational> binom(n + 1);
    for (unsigned long k = 0; k <= n; ++k) binom[k] = Rational(binomial(n, static_cast<long>(k)));
    CHECK(check_point(p, binom).feasible());
  }
}

TEST_CASE("dual constraint ranges") {
  KrawtchoukTable t = build_table(16);
  CHECK(build_dual(16, 8, Mode::AlmostBalanced, t).rows.size() == 1);  // u = 8 only
  CHECK(build_dual(16, 8, Mode::MinDistance, t).rows.size() == 9);     // u = 8..16
  CHECK(build_dual(16, 10, Mode::AlmostBalanced, t).rows.size() == 0);  // empty range
}

TEST_CASE("dual solves match the closed form") {
  KrawtchoukTable t = build_table(36);
  LpSolution sol = solve_exact(build_dual(36, 16, Mode::AlmostBalanced, t));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective_value == 64);
}

TEST_CASE("a_lp at the extremes") {
  for (unsigned long n = 2; n <= 10; ++n) {
    CHECK(a_lp(n, n) == 2);
    CHECK(a_lp(n, 1) == Rational(pow2(n)));
  }
}

TEST_CASE("b_lp reproduces the closed form anchors") {
  CHECK(b_lp(16, 8) == 16);
  CHECK(b_lp(36, 16) == 64);
  CHECK(b_lp(36, 18) == 36);
}

TEST_CASE("balanced relaxation is at most the min-distance bound; monotone in d") {
  for (unsigned long n = 4; n <= 24; ++n) {
    Rational prev(-1);
    for (unsigned long d = 1; 2 * d <= n; ++d) {
      Rational balanced = b_lp(n, d);
      CHECK(balanced <= a_lp(n, d));
      if (prev >= 0) CHECK(balanced <= prev);  // non-increasing in d
      prev = balanced;
    }
  }
}

TEST_CASE("bound_report composes values, certificate, and witness") {
  BoundReport rep = bound_report(16, 8, Mode::AlmostBalanced);
  CHECK(rep.lp_value == 16);
  REQUIRE(rep.closed_form.has_value());
  CHECK(*rep.closed_form == 16);
  CHECK(rep.certificate_status == CertStatus::Verified);
  CHECK_FALSE(rep.lower_bound_witness.has_value());  // d = n/2 has no witness
  CHECK_FALSE(rep.balanced_range_empty);

  BoundReport gate = bound_report(16, 6, Mode::AlmostBalanced);
  CHECK_FALSE(gate.closed_form.has_value());  // boundary fails the strict test
  CHECK(gate.certificate_status == CertStatus::NotApplicable);
  REQUIRE(gate.lower_bound_witness.has_value());
  CHECK(*gate.lower_bound_witness <= gate.lp_value);

  BoundReport md = bound_report(10, 3, Mode::MinDistance);
  CHECK_FALSE(md.closed_form.has_value());
  CHECK_FALSE(md.lower_bound_witness.has_value());
  CHECK(md.lp_value > 0);
}

TEST_CASE("empty balanced range is flagged and still consistent") {
  BoundReport rep = bound_report(10, 6, Mode::AlmostBalanced);
  CHECK(rep.balanced_range_empty);
  CHECK(rep.lp_value == 1);  // only a_0 survives the fixings
}

TEST_CASE("bound_table preserves query order") {
  std::vector<BoundQuery> queries = {{16, 8, Mode::AlmostBalanced},
                                     {12, 6, Mode::AlmostBalanced},
                                     {16, 8, Mode::MinDistance}};
  std::vector<BoundReport> reports = bound_table(queries);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].n == 16);
  CHECK(reports[0].lp_value == 16);
  CHECK(reports[1].n == 12);
  CHECK(reports[2].mode == Mode::MinDistance);
}
