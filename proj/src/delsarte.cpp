#include "lpb/delsarte.hpp"

#include <exception>
#include <stdexcept>

#include "lpb/certificate.hpp"
#include "lpb/witness.hpp"

namespace lpb {

Rational DualPolynomial::evaluate(const KrawtchoukTable& table, unsigned long u) const {
  Rational v(0);
  for (unsigned long k = 0; k <= n; ++k)
    if (coeffs[k] != 0) v += coeffs[k] * table.at(k, u);
  return v;
}

Rational DualPolynomial::objective() const {
  Rational v(0);
  for (unsigned long k = 0; k <= n; ++k)
    if (coeffs[k] != 0) v += coeffs[k] * Rational(binomial(n, static_cast<long>(k)));
  return v;
}

namespace {

void require_params(unsigned long n, unsigned long d, const char* who) {
  if (n < 1 || d < 1 || d > n)
    throw std::domain_error(std::string(who) + ": requires 1 <= d <= n");
}

// Indices forced to zero by the mode: 1..d-1, and k > n-d for AlmostBalanced.
std::vector<std::pair<std::size_t, Rational>> zero_fixings(unsigned long n, unsigned long d,
                                                           Mode mode) {
  std::vector<std::pair<std::size_t, Rational>> fixed;
  fixed.emplace_back(0, Rational(1));
  for (unsigned long k = 1; k <= n; ++k) {
    bool zero = k <= d - 1;
    if (mode == Mode::AlmostBalanced && k > n - d) zero = true;
    if (zero) fixed.emplace_back(k, Rational(0));
  }
  return fixed;
}

}  // namespace

LpProblem build_primal(unsigned long n, unsigned long d, Mode mode, const KrawtchoukTable& table) {
  require_params(n, d, "build_primal");
  LpProblem p;
  p.num_vars = n + 1;
  p.sense = Sense::Maximize;
  p.objective.assign(n + 1, Rational(1));
  p.rows.reserve(n + 1);
  for (unsigned long s = 0; s <= n; ++s) {
    LpRow row;
    row.rel = Relation::GreaterEqualZero;
    row.coeffs.resize(n + 1);
    for (unsigned long k = 0; k <= n; ++k) row.coeffs[k] = table.at(s, k);
    p.rows.push_back(std::move(row));
  }
  p.fixed = zero_fixings(n, d, mode);
  p.nonneg = true;
  return p;
}

LpProblem build_primal(unsigned long n, unsigned long d, Mode mode) {
  require_params(n, d, "build_primal");
  return build_primal(n, d, mode, build_table(n));
}

LpProblem build_dual(unsigned long n, unsigned long d, Mode mode, const KrawtchoukTable& table) {
  require_params(n, d, "build_dual");
  LpProblem p;
  p.num_vars = n + 1;
  p.sense = Sense::Minimize;
  p.objective.resize(n + 1);
  for (unsigned long k = 0; k <= n; ++k) p.objective[k] = Rational(binomial(n, static_cast<long>(k)));
  unsigned long hi = mode == Mode::MinDistance ? n : n - d;
  for (unsigned long u = d; u <= hi; ++u) {
    LpRow row;
    row.rel = Relation::LessEqualZero;
    row.coeffs.resize(n + 1);
    for (unsigned long k = 0; k <= n; ++k) row.coeffs[k] = table.at(k, u);
    p.rows.push_back(std::move(row));
  }
  p.fixed.emplace_back(0, Rational(1));
  p.nonneg = true;
  return p;
}

LpProblem build_dual(unsigned long n, unsigned long d, Mode mode) {
  require_params(n, d, "build_dual");
  return build_dual(n, d, mode, build_table(n));
}

namespace {

Rational solve_pair(unsigned long n, unsigned long d, Mode mode, const KrawtchoukTable& table) {
  LpSolution primal = solve_exact(build_primal(n, d, mode, table));
  LpSolution dual = solve_exact(build_dual(n, d, mode, table));
  if (primal.status != LpStatus::Optimal || dual.status != LpStatus::Optimal)
    throw std::logic_error("solve_pair: bound LP did not solve to optimality");
  if (primal.objective_value != dual.objective_value)
    throw std::logic_error("solve_pair: primal and dual optima disagree");
  return primal.objective_value;
}

}  // namespace

Rational a_lp(unsigned long n, unsigned long d) {
  require_params(n, d, "a_lp");
  return solve_pair(n, d, Mode::MinDistance, build_table(n));
}

Rational b_lp(unsigned long n, unsigned long d) {
  require_params(n, d, "b_lp");
  return solve_pair(n, d, Mode::AlmostBalanced, build_table(n));
}

BoundReport bound_report(unsigned long n, unsigned long d, Mode mode) {
  require_params(n, d, "bound_report");
  KrawtchoukTable table = build_table(n);

  BoundReport rep;
  rep.n = n;
  rep.d = d;
  rep.mode = mode;
  rep.balanced_range_empty = mode == Mode::AlmostBalanced && 2 * d > n;
  rep.lp_value = solve_pair(n, d, mode, table);

  if (mode == Mode::AlmostBalanced && in_grey_rankin_domain(n, d)) {
    rep.closed_form = grey_rankin_value(n, d);
    Certificate cert = build_certificate(n, d);
    bool ok = verify_dual_feasible(cert, table).all_pass() &&
              verify_primal_feasible(cert, table).all_pass() &&
              verify_complementary_slackness(cert, table).all_pass();
    rep.certificate_status = ok ? CertStatus::Verified : CertStatus::Failed;
    if (ok && rep.lp_value != *rep.closed_form)
      throw std::logic_error("bound_report: verified certificate disagrees with the solver");
  }

  if (mode == Mode::AlmostBalanced && d >= 1 && 2 * d < n) {
    rep.lower_bound_witness = lp_lower_bound(n, d);
    if (*rep.lower_bound_witness > rep.lp_value)
      throw std::logic_error("bound_report: witness objective exceeds the LP optimum");
  }
  return rep;
}

namespace {

std::vector<BoundReport> bound_table_impl(const std::vector<BoundQuery>& queries, bool parallel) {
  for (const BoundQuery& q : queries) require_params(q.n, q.d, "bound_table");
  std::vector<BoundReport> out(queries.size());
  std::exception_ptr error;
  const long count = static_cast<long>(queries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = bound_report(queries[i].n, queries[i].d, queries[i].mode);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

std::vector<BoundReport> bound_table(const std::vector<BoundQuery>& queries) {
  return bound_table_impl(queries, true);
}

std::vector<BoundReport> bound_table_serial(const std::vector<BoundQuery>& queries) {
  return bound_table_impl(queries, false);
}

}  // namespace lpb
