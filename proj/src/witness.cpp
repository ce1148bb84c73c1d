#include "lpb/witness.hpp"

#include <stdexcept>

#include "lpb/lp.hpp"

namespace lpb {

namespace {

void require_range(unsigned long n, unsigned long d, const char* who) {
  if (d < 1 || 2 * d >= n)
    throw std::domain_error(std::string(who) + ": requires 1 <= d < n/2");
}

// Exact radicand eps^2 = C(n, xf) / (16 n^2 2^n C(n, d)).
Rational epsilon_squared(unsigned long n, unsigned long d, unsigned long xf) {
  Integer num = binomial(n, static_cast<long>(xf));
  Integer den = 16 * Integer(n) * Integer(n) * pow2(n) * binomial(n, static_cast<long>(d));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational epsilon_lower(unsigned long n, unsigned long d) {
  require_range(n, d, "epsilon_lower");
  unsigned long xf = first_root_floor(n, d).floor;
  Rational rho = epsilon_squared(n, d, xf);

  // Scale S with S^2 rho >= 64; then floor(sqrt(floor(rho S^2))) / S lies in
  // [eps/2, eps] with comfortable margin.
  Integer ratio_ceil;
  mpz_cdiv_q(ratio_ceil.get_mpz_t(), Integer(64 * rho.get_den()).get_mpz_t(),
             rho.get_num_mpz_t());
  Integer scale = isqrt_floor(ratio_ceil) + 1;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), Integer(rho.get_num() * scale * scale).get_mpz_t(),
             rho.get_den_mpz_t());
  Integer t = isqrt_floor(q);
  Rational r(t, scale);
  r.canonicalize();
  if (!(r > 0 && r * r <= rho && 4 * r * r >= rho))
    throw std::logic_error("epsilon_lower: certified bounds violated (internal error)");
  return r;
}

LowerBoundWitness build_witness_with_epsilon(unsigned long n, unsigned long d,
                                             const Rational& eps_in) {
  require_range(n, d, "build_witness_with_epsilon");
  Rational eps = eps_in;
  eps.canonicalize();
  LowerBoundWitness w;
  w.n = n;
  w.d = d;
  w.epsilon_lower = eps;
  w.a.n = n;
  w.a.a.assign(n + 1, Rational(0));
  w.a.a[0] = 1;
  Rational edge = eps * Rational(static_cast<long>(d) + 1) * Rational(binomial(n, static_cast<long>(d)));
  w.a.a[d] = edge;
  w.a.a[n - d] = edge;
  for (unsigned long k = d + 1; k < n - d; ++k)
    w.a.a[k] = eps * Rational(binomial(n, static_cast<long>(k)));
  w.objective = 0;
  for (const Rational& v : w.a.a) w.objective += v;

  KrawtchoukTable table = build_table(n);
  FeasibilityReport rep = check_point(build_primal(n, d, Mode::AlmostBalanced, table), w.a.a);
  if (!rep.feasible())
    throw std::invalid_argument("build_witness_with_epsilon: scale yields an infeasible point");
  return w;
}

LowerBoundWitness build_witness(unsigned long n, unsigned long d) {
  require_range(n, d, "build_witness");
  RootFloor rf = first_root_floor(n, d);
  Rational eps = epsilon_lower(n, d);
  // Rows are affine in the scale and strictly positive at zero, so halving
  // reaches the feasible interval in finitely many steps.
  for (unsigned halvings = 0;; ++halvings) {
    try {
      LowerBoundWitness w = build_witness_with_epsilon(n, d, eps);
      w.x_d_bracket = rf.bracket;
      w.x_floor = rf.floor;
      w.scale_halvings = halvings;
      return w;
    } catch (const std::invalid_argument&) {
      if (halvings >= 64)
        throw std::logic_error("build_witness: no feasible scale found (internal error)");
      eps /= 2;
    }
  }
}

Rational lp_lower_bound(unsigned long n, unsigned long d) {
  return build_witness(n, d).objective;
}

}  // namespace lpb
