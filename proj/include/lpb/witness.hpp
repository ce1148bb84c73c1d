#pragma once

#include "lpb/delsarte.hpp"
#include "lpb/krawtchouk.hpp"
#include "lpb/rational.hpp"

namespace lpb {

/// Explicit feasible point for the almost-balanced primal LP, certifying an
/// exact lower bound on its optimum. Requires 1 <= d < n/2.
///
/// The scale eps is a rational under-approximation of
///   (1/4n) sqrt( C(n, floor(x_d)) / (2^n C(n, d)) )
/// with x_d the smallest root of K_d; the distribution is
///   a_0 = 1, a_d = a_{n-d} = eps (d+1) C(n,d),
///   a_k = eps C(n,k) for d < k < n-d, zero elsewhere.
///
/// Every transform row is affine in eps and strictly positive at eps = 0, so
/// the feasible scales form an interval [0, eps_max]. For some pairs with odd
/// d (first at n = 22, d = 7) eps_max is below the square-root scale above:
/// the top even-degree rows go negative there. build_witness halves the scale
/// until the point verifies, so epsilon_lower is always a certified
/// under-approximation of the square-root scale and the point is always
/// exactly feasible; scale_halvings records the adjustment.
struct LowerBoundWitness {
  unsigned long n = 0, d = 0;
  RootBracket x_d_bracket;
  unsigned long x_floor = 0;
  Rational epsilon_lower;
  unsigned scale_halvings = 0;
  DistanceDistribution a;
  Rational objective;
};

/// Certified rational r with r <= eps <= 2r, i.e. exactly
///   r^2 <= C(n, floor(x_d)) / (16 n^2 2^n C(n, d)) <= 4 r^2.
Rational epsilon_lower(unsigned long n, unsigned long d);

LowerBoundWitness build_witness(unsigned long n, unsigned long d);

/// Same shape at a caller-chosen scale (diagnostics; eps = 0 gives the unit
/// distribution). Throws std::invalid_argument when the result is infeasible.
LowerBoundWitness build_witness_with_epsilon(unsigned long n, unsigned long d, const Rational& eps);

/// Witness objective: an exact lower bound on the almost-balanced LP optimum.
Rational lp_lower_bound(unsigned long n, unsigned long d);

}  // namespace lpb
