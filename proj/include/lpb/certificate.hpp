#pragma once

#include <string>
#include <vector>

#include "lpb/delsarte.hpp"
#include "lpb/krawtchouk.hpp"
#include "lpb/rational.hpp"

namespace lpb {

/// Parameter range of the Grey-Rankin closed form: n, d even, d <= n/2, and
/// d >= (n - sqrt(n))/2 + 1, tested in integers as (n - 2d + 2)^2 <= n.
bool in_grey_rankin_domain(unsigned long n, unsigned long d);

/// Validated (n, d) pair inside the closed-form range. Construction throws
/// std::domain_error outside it and asserts K_2(d) < 0, which the range
/// implies (d lies strictly between the roots of K_2).
struct GreyRankinDomain {
  GreyRankinDomain(unsigned long n, unsigned long d);
  unsigned long n;
  unsigned long d;
};

/// 4d(n-d) / (n - (n-2d)^2), the optimal value of the almost-balanced pair of
/// LPs on the domain above. Throws std::domain_error outside it.
Rational grey_rankin_value(unsigned long n, unsigned long d);

/// Matched optimal solutions for the almost-balanced dual and primal:
///   beta = 1 + beta_2 K_2 with beta_2 = -1/K_2(d),
///   alpha supported on {0, d, n-d} with alpha_d = alpha_{n-d}
///       = -C(n,2) / (2 K_2(d))   (masses merged into one coordinate at d = n/2),
/// both attaining the same objective `value`.
struct Certificate {
  unsigned long n = 0, d = 0;
  DualPolynomial beta;
  DistanceDistribution alpha;
  Rational value;
};

Certificate build_certificate(unsigned long n, unsigned long d);

struct SlackCheck {
  std::string name;
  bool pass = false;
  Rational slack;  // distance to the constraint boundary; negative iff violated
};

struct SlackReport {
  std::vector<SlackCheck> checks;
  bool all_pass() const;
  /// Smallest slack across all checks (the binding constraint).
  Rational tightest_slack() const;
};

/// beta_0 = 1, beta >= 0, beta(u) <= 0 for every integer u in d..n-d, and
/// beta(d) = beta(n-d) = 0 exactly.
SlackReport verify_dual_feasible(const Certificate& cert, const KrawtchoukTable& table);

/// alpha_0 = 1, alpha >= 0, and every transform row sum_k alpha_k K_s(k) >= 0
/// for s = 0..n, with equality required at s = 2.
SlackReport verify_primal_feasible(const Certificate& cert, const KrawtchoukTable& table);

/// beta(u) * alpha_u = 0 on the constraint range and
/// beta_s * (sum_k alpha_k K_s(k)) = 0 for s = 1..n; slack is the product.
SlackReport verify_complementary_slackness(const Certificate& cert, const KrawtchoukTable& table);

/// Zeroes the odd-indexed coefficients of a feasible dual. The result stays
/// feasible and its objective never increases. Throws std::invalid_argument
/// when the input itself is infeasible for the almost-balanced dual at d.
DualPolynomial symmetrize_even(const DualPolynomial& theta, unsigned long d,
                               const KrawtchoukTable& table);

/// Growth bounds on |K_s(d)| over the Grey-Rankin domain, by direct exact
/// evaluation with C = |K_2(d)| / C(n,2):
///   - |K_s(d)| <= C * C(n,s) for s = 2..n-2,
///   - |K_3(d)| <= |K_2(d)| (n-2)/3,
///   - the recurrence step |K_{q+1}(d)| <= C * C(n,q+1) (n-2d+q)/(n-q),
///     checked at q = 2 and q = 3 when its premises |K_{q-1}(d)| <= C C(n,q-1)
///     and |K_q(d)| <= C C(n,q) hold (at q = 2 they can fail for d below n/2,
///     in which case that instance is skipped as vacuous).
SlackReport check_kraw_growth_bounds(unsigned long n, unsigned long d);

}  // namespace lpb
