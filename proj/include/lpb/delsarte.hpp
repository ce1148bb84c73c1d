#pragma once

#include <optional>
#include <vector>

#include "lpb/krawtchouk.hpp"
#include "lpb/lp.hpp"
#include "lpb/rational.hpp"

namespace lpb {

/// MinDistance: pairwise distances >= d. AlmostBalanced: distances in [d, n-d].
enum class Mode { MinDistance, AlmostBalanced };

/// Distance distribution a_0..a_n of a code: a_0 = 1, a_k >= 0, with the
/// mode's index ranges forced to zero.
struct DistanceDistribution {
  unsigned long n = 0;
  std::vector<Rational> a;
};

/// Coefficients of beta(x) = sum_k beta_k K_k(x) in the Krawtchouk basis.
struct DualPolynomial {
  unsigned long n = 0;
  std::vector<Rational> coeffs;

  /// beta(u) at an integer point, via the table.
  Rational evaluate(const KrawtchoukTable& table, unsigned long u) const;
  /// beta(0) = sum_k beta_k C(n, k), the dual objective.
  Rational objective() const;
};

/// maximize sum a_k  s.t.  sum_k a_k K_s(k) >= 0 (s = 0..n), a_0 = 1,
/// the mode's zero fixings, a >= 0.
LpProblem build_primal(unsigned long n, unsigned long d, Mode mode, const KrawtchoukTable& table);
LpProblem build_primal(unsigned long n, unsigned long d, Mode mode);

/// minimize beta(0)  s.t.  beta(u) <= 0 on the mode's range, beta_0 = 1,
/// beta >= 0. Range: u = d..n for MinDistance, u = d..n-d for AlmostBalanced
/// (empty when d > n/2, leaving only the fixing and nonnegativity).
LpProblem build_dual(unsigned long n, unsigned long d, Mode mode, const KrawtchoukTable& table);
LpProblem build_dual(unsigned long n, unsigned long d, Mode mode);

/// Optimal value of the min-distance pair (primal and dual solved and
/// cross-checked for exact equality).
Rational a_lp(unsigned long n, unsigned long d);
/// Optimal value of the almost-balanced pair, same cross-check.
Rational b_lp(unsigned long n, unsigned long d);

enum class CertStatus { Verified, NotApplicable, Failed };

struct BoundReport {
  unsigned long n = 0, d = 0;
  Mode mode = Mode::MinDistance;
  Rational lp_value;
  std::optional<Rational> closed_form;  // Grey-Rankin value when in domain
  CertStatus certificate_status = CertStatus::NotApplicable;
  std::optional<Rational> lower_bound_witness;
  bool balanced_range_empty = false;  // AlmostBalanced with d > n/2
};

/// Full pipeline for one (n, d): both LPs solved and cross-checked, the
/// closed form and its certificate when applicable, and the lower-bound
/// witness objective for the balanced mode.
BoundReport bound_report(unsigned long n, unsigned long d, Mode mode);

struct BoundQuery {
  unsigned long n = 0, d = 0;
  Mode mode = Mode::MinDistance;
};

/// One report per query, order preserved; queries run in parallel.
std::vector<BoundReport> bound_table(const std::vector<BoundQuery>& queries);
/// Serial reference for the parallel sweep; identical output.
std::vector<BoundReport> bound_table_serial(const std::vector<BoundQuery>& queries);

}  // namespace lpb
