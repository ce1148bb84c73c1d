#include "lpb/certificate.hpp"

#include <stdexcept>
#include <utility>

namespace lpb {

bool SlackReport::all_pass() const {
  for (const SlackCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

Rational SlackReport::tightest_slack() const {
  if (checks.empty()) throw std::logic_error("SlackReport::tightest_slack: empty report");
  Rational best = checks.front().slack;
  for (const SlackCheck& c : checks)
    if (c.slack < best) best = c.slack;
  return best;
}

bool in_grey_rankin_domain(unsigned long n, unsigned long d) {
  if (n < 2 || d < 1) return false;
  if (n % 2 != 0 || d % 2 != 0) return false;
  if (2 * d > n) return false;
  unsigned long j2 = n - 2 * d + 2;  // positive since d <= n/2
  return j2 * j2 <= n;
}

namespace {

void require_domain(unsigned long n, unsigned long d, const char* who) {
  if (!in_grey_rankin_domain(n, d))
    throw std::domain_error(std::string(who) + ": (n, d) outside the Grey-Rankin domain");
}

}  // namespace

GreyRankinDomain::GreyRankinDomain(unsigned long n_in, unsigned long d_in) : n(n_in), d(d_in) {
  require_domain(n, d, "GreyRankinDomain");
  if (kraw_direct(n, 2, Rational(static_cast<long>(d))) >= 0)
    throw std::logic_error("GreyRankinDomain: K_2(d) not negative in domain");
}

Rational grey_rankin_value(unsigned long n, unsigned long d) {
  require_domain(n, d, "grey_rankin_value");
  long ln = static_cast<long>(n), ld = static_cast<long>(d);
  long denom = ln - (ln - 2 * ld) * (ln - 2 * ld);
  if (denom <= 0) throw std::logic_error("grey_rankin_value: nonpositive denominator");
  Rational v(4 * ld * (ln - ld), denom);
  v.canonicalize();
  return v;
}

Certificate build_certificate(unsigned long n_in, unsigned long d_in) {
  GreyRankinDomain domain(n_in, d_in);
  const unsigned long n = domain.n, d = domain.d;
  Rational k2d = kraw_direct(n, 2, Rational(static_cast<long>(d)));

  Certificate cert;
  cert.n = n;
  cert.d = d;
  cert.beta.n = n;
  cert.beta.coeffs.assign(n + 1, Rational(0));
  cert.beta.coeffs[0] = 1;
  cert.beta.coeffs[2] = Rational(-1) / k2d;

  cert.alpha.n = n;
  cert.alpha.a.assign(n + 1, Rational(0));
  cert.alpha.a[0] = 1;
  Rational mass = Rational(-binomial(n, 2)) / (2 * k2d);
  cert.alpha.a[d] += mass;
  cert.alpha.a[n - d] += mass;  // merges into 2*mass at d = n/2

  cert.value = 1 - Rational(binomial(n, 2)) / k2d;
  if (cert.value != grey_rankin_value(n, d))
    throw std::logic_error("build_certificate: objective mismatch with the closed form");
  return cert;
}

namespace {

void require_shape(const Certificate& cert, const KrawtchoukTable& table, const char* who) {
  if (cert.n != table.n() || cert.beta.coeffs.size() != cert.n + 1 ||
      cert.alpha.a.size() != cert.n + 1 || cert.d < 1 || cert.d > cert.n)
    throw std::invalid_argument(std::string(who) + ": malformed certificate");
}

SlackCheck eq_check(std::string name, const Rational& lhs, const Rational& rhs) {
  Rational diff(lhs - rhs);
  return {std::move(name), diff == 0, std::move(diff)};
}

SlackCheck ge_check(std::string name, Rational slack) {
  bool ok = slack >= 0;
  return {std::move(name), ok, std::move(slack)};
}

}  // namespace

SlackReport verify_dual_feasible(const Certificate& cert, const KrawtchoukTable& table) {
  require_shape(cert, table, "verify_dual_feasible");
  const unsigned long n = cert.n, d = cert.d;
  SlackReport rep;
  rep.checks.push_back(eq_check("beta_0 = 1", cert.beta.coeffs[0], Rational(1)));
  for (unsigned long k = 0; k <= n; ++k)
    rep.checks.push_back(ge_check("beta_" + std::to_string(k) + " >= 0", cert.beta.coeffs[k]));
  for (unsigned long u = d; u + d <= n; ++u) {
    Rational value = cert.beta.evaluate(table, u);
    rep.checks.push_back(ge_check("beta(" + std::to_string(u) + ") <= 0", Rational(-value)));
  }
  rep.checks.push_back(eq_check("beta(d) = 0", cert.beta.evaluate(table, d), Rational(0)));
  rep.checks.push_back(eq_check("beta(n-d) = 0", cert.beta.evaluate(table, n - d), Rational(0)));
  return rep;
}

SlackReport verify_primal_feasible(const Certificate& cert, const KrawtchoukTable& table) {
  require_shape(cert, table, "verify_primal_feasible");
  const unsigned long n = cert.n;
  SlackReport rep;
  rep.checks.push_back(eq_check("alpha_0 = 1", cert.alpha.a[0], Rational(1)));
  for (unsigned long k = 0; k <= n; ++k)
    rep.checks.push_back(ge_check("alpha_" + std::to_string(k) + " >= 0", cert.alpha.a[k]));
  for (unsigned long s = 0; s <= n; ++s) {
    Rational row(0);
    for (unsigned long k = 0; k <= n; ++k)
      if (cert.alpha.a[k] != 0) row += cert.alpha.a[k] * table.at(s, k);
    if (s == 2)
      rep.checks.push_back(eq_check("transform row s=2 = 0", row, Rational(0)));
    else
      rep.checks.push_back(ge_check("transform row s=" + std::to_string(s) + " >= 0", std::move(row)));
  }
  return rep;
}

SlackReport verify_complementary_slackness(const Certificate& cert, const KrawtchoukTable& table) {
  require_shape(cert, table, "verify_complementary_slackness");
  const unsigned long n = cert.n, d = cert.d;
  SlackReport rep;
  for (unsigned long u = d; u + d <= n; ++u) {
    Rational product = cert.beta.evaluate(table, u) * cert.alpha.a[u];
    rep.checks.push_back(
        {"beta(" + std::to_string(u) + ") * alpha_" + std::to_string(u), product == 0, product});
  }
  for (unsigned long s = 1; s <= n; ++s) {
    if (cert.beta.coeffs[s] == 0) {
      rep.checks.push_back({"beta_" + std::to_string(s) + " * row", true, Rational(0)});
      continue;
    }
    Rational row(0);
    for (unsigned long k = 0; k <= n; ++k)
      if (cert.alpha.a[k] != 0) row += cert.alpha.a[k] * table.at(s, k);
    Rational product = cert.beta.coeffs[s] * row;
    rep.checks.push_back({"beta_" + std::to_string(s) + " * row", product == 0, product});
  }
  return rep;
}

DualPolynomial symmetrize_even(const DualPolynomial& theta, unsigned long d,
                               const KrawtchoukTable& table) {
  const unsigned long n = theta.n;
  if (theta.coeffs.size() != n + 1 || n != table.n())
    throw std::invalid_argument("symmetrize_even: malformed dual polynomial");
  if (theta.coeffs[0] != 1)
    throw std::invalid_argument("symmetrize_even: input has beta_0 != 1");
  for (unsigned long k = 0; k <= n; ++k)
    if (theta.coeffs[k] < 0)
      throw std::invalid_argument("symmetrize_even: input has a negative coefficient");
  for (unsigned long u = d; u + d <= n; ++u)
    if (theta.evaluate(table, u) > 0)
      throw std::invalid_argument("symmetrize_even: input violates beta(" + std::to_string(u) +
                                  ") <= 0");
  DualPolynomial out = theta;
  for (unsigned long k = 1; k <= n; k += 2) out.coeffs[k] = 0;
  return out;
}

SlackReport check_kraw_growth_bounds(unsigned long n, unsigned long d) {
  require_domain(n, d, "check_kraw_growth_bounds");
  // One recurrence pass gives the whole column K_s(d), s = 0..n.
  std::vector<Rational> col(n + 1);
  for (unsigned long s = 0; s <= n; ++s) col[s] = kraw_recurrence(n, s, Rational(static_cast<long>(d)));
  Rational c = Rational(abs(col[2])) / Rational(binomial(n, 2));

  SlackReport rep;
  for (unsigned long s = 2; s + 2 <= n; ++s) {
    Rational bound = c * Rational(binomial(n, static_cast<long>(s)));
    rep.checks.push_back(ge_check("|K_" + std::to_string(s) + "(d)| <= C*C(n,s)",
                                  Rational(bound - abs(col[s]))));
  }
  Rational k3_bound = abs(col[2]) * (static_cast<long>(n) - 2) / 3;
  rep.checks.push_back(ge_check("|K_3(d)| <= |K_2(d)|(n-2)/3", Rational(k3_bound - abs(col[3]))));

  // Recurrence step instances; each is only claimed when its premises hold.
  for (unsigned long q : {2ul, 3ul}) {
    bool premises = abs(col[q - 1]) <= c * Rational(binomial(n, static_cast<long>(q - 1))) &&
                    abs(col[q]) <= c * Rational(binomial(n, static_cast<long>(q)));
    if (!premises) continue;
    Rational step = c * Rational(binomial(n, static_cast<long>(q + 1))) *
                    static_cast<long>(n - 2 * d + q) / static_cast<long>(n - q);
    rep.checks.push_back(ge_check("step bound at q=" + std::to_string(q),
                                  Rational(step - abs(col[q + 1]))));
  }
  return rep;
}

}  // namespace lpb
