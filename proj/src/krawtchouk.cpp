#include "lpb/krawtchouk.hpp"

#include <stdexcept>
#include <utility>

namespace lpb {

namespace {

// mpq_class comparisons assume canonical operands; the two-argument
// constructor does not canonicalize, so normalize arguments on entry.
Rational canonical(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return r;
}

}  // namespace

Rational binomial_poly(const Rational& x_in, unsigned long j) {
  Rational x = canonical(x_in);
  Rational r(1);
  for (unsigned long i = 0; i < j; ++i) {
    r *= x - static_cast<long>(i);
    r /= static_cast<long>(i + 1);
  }
  return r;
}

Rational kraw_direct(unsigned long n, unsigned long s, const Rational& x_in) {
  if (s > n) throw std::domain_error("kraw_direct: degree s exceeds n");
  Rational x = canonical(x_in);
  // Incremental C(x, j) and C(n - x, i) sequences keep the sum linear in s.
  Rational nx = Rational(static_cast<long>(n)) - x;
  std::vector<Rational> cx(s + 1), cnx(s + 1);
  cx[0] = 1;
  cnx[0] = 1;
  for (unsigned long j = 1; j <= s; ++j) {
    cx[j] = cx[j - 1] * (x - static_cast<long>(j - 1)) / static_cast<long>(j);
    cnx[j] = cnx[j - 1] * (nx - static_cast<long>(j - 1)) / static_cast<long>(j);
  }
  Rational sum(0);
  for (unsigned long j = 0; j <= s; ++j) {
    Rational term = cx[j] * cnx[s - j];
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

Rational kraw_recurrence(unsigned long n, unsigned long s, const Rational& x_in) {
  if (s > n) throw std::domain_error("kraw_recurrence: degree s exceeds n");
  Rational x = canonical(x_in);
  Rational prev(1);  // K_0
  if (s == 0) return prev;
  Rational lin = Rational(static_cast<long>(n)) - 2 * x;
  Rational cur = lin;  // K_1
  for (unsigned long q = 1; q < s; ++q) {
    Rational next = (lin * cur - Rational(static_cast<long>(n - q + 1)) * prev) /
                    Rational(static_cast<long>(q + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational k2_closed_form(unsigned long n, const Rational& x_in) {
  if (n < 2) throw std::domain_error("k2_closed_form: requires n >= 2");
  Rational x = canonical(x_in);
  return 2 * x * x - 2 * static_cast<long>(n) * x + Rational(binomial(n, 2));
}

const Rational& KrawtchoukTable::at(unsigned long s, unsigned long j) const {
  if (s > n_ || j > n_) throw std::out_of_range("KrawtchoukTable::at: index exceeds n");
  return values_[s * (n_ + 1) + j];
}

KrawtchoukTable::KrawtchoukTable(unsigned long n, bool parallel)
    : n_(n), values_((n + 1) * (n + 1)) {
  const long ln = static_cast<long>(n);
  const long cols = ln + 1;
  // One three-term recurrence per column; columns are independent.
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long j = 0; j < cols; ++j) {
    Integer prev(1), cur(ln - 2 * j);
    values_[j] = Rational(prev);
    if (n >= 1) values_[(n + 1) + j] = Rational(cur);
    for (long q = 1; q < ln; ++q) {
      // (q+1) K_{q+1}(j) = (n - 2j) K_q(j) - (n - q + 1) K_{q-1}(j);
      // the division is exact at integer points.
      Integer next = (ln - 2 * j) * cur - (ln - q + 1) * prev;
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(q + 1));
      prev = std::move(cur);
      cur = std::move(next);
      values_[static_cast<unsigned long>(q + 1) * (n + 1) + j] = Rational(cur);
    }
  }
}

KrawtchoukTable build_table(unsigned long n) { return KrawtchoukTable(n, true); }

KrawtchoukTable build_table_serial(unsigned long n) { return KrawtchoukTable(n, false); }

namespace {

int sign_of(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

// Bisects [lo, hi] with sign(K_d(lo)) > 0 > sign(K_d(hi)) until `done` holds
// or an exact root is hit.
template <typename Done>
RootBracket bisect_root(unsigned long n, unsigned long d, Rational lo, Rational hi, Done done) {
  while (!done(lo, hi)) {
    Rational mid = (lo + hi) / 2;
    int sg = sign_of(kraw_direct(n, d, mid));
    if (sg == 0) return RootBracket{n, d, mid, mid};
    if (sg > 0)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return RootBracket{n, d, std::move(lo), std::move(hi)};
}

// First integer interval where K_d changes sign, or the exact integer root.
// K_d(0) = C(n, d) > 0, so every point before the change is strictly positive.
RootBracket initial_bracket(unsigned long n, unsigned long d) {
  unsigned long half = (n + 1) / 2;
  for (unsigned long x = 1; x <= half + 1; ++x) {
    int sg = sign_of(kraw_direct(n, d, Rational(static_cast<long>(x))));
    if (sg == 0) return RootBracket{n, d, Rational(static_cast<long>(x)), Rational(static_cast<long>(x))};
    if (sg < 0)
      return RootBracket{n, d, Rational(static_cast<long>(x - 1)), Rational(static_cast<long>(x))};
  }
  throw std::logic_error("first_root: no sign change found (internal error)");
}

}  // namespace

RootBracket first_root(unsigned long n, unsigned long d, const Integer& denom_bound) {
  if (d < 1 || d > n) throw std::domain_error("first_root: requires 1 <= d <= n");
  if (denom_bound < 1) throw std::domain_error("first_root: denom_bound must be positive");
  RootBracket start = initial_bracket(n, d);
  if (start.exact()) return start;
  Rational target(1);
  target /= Rational(denom_bound);
  return bisect_root(n, d, start.low, start.high,
                     [&](const Rational& lo, const Rational& hi) { return Rational(hi - lo) <= target; });
}

RootFloor first_root_floor(unsigned long n, unsigned long d) {
  if (d < 1 || d > n) throw std::domain_error("first_root_floor: requires 1 <= d <= n");
  RootBracket b = initial_bracket(n, d);
  if (!b.exact()) {
    b = bisect_root(n, d, b.low, b.high, [](const Rational& lo, const Rational& hi) {
      return rational_floor(lo) == rational_floor(hi);
    });
  }
  Integer f = rational_floor(b.low);
  return RootFloor{f.get_ui(), std::move(b)};
}

}  // namespace lpb
