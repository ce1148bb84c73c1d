#pragma once

#include <vector>

#include "lpb/rational.hpp"

namespace lpb {

/// Generalized binomial coefficient C(x, j) = x(x-1)...(x-j+1) / j! as a
/// polynomial in the rational argument x.
Rational binomial_poly(const Rational& x, unsigned long j);

/// K_s(x) for block length n by direct expansion of the defining alternating
/// sum. Valid at any rational x. Throws std::domain_error when s > n.
Rational kraw_direct(unsigned long n, unsigned long s, const Rational& x);

/// Same value through the three-term recurrence
///   (q+1) K_{q+1}(x) = (n - 2x) K_q(x) - (n - q + 1) K_{q-1}(x)
/// seeded with K_0 = 1, K_1 = n - 2x.
Rational kraw_recurrence(unsigned long n, unsigned long s, const Rational& x);

/// 2x^2 - 2nx + C(n,2); the degree-2 Krawtchouk polynomial in closed form,
/// with roots (n +- sqrt(n))/2. Requires n >= 2.
Rational k2_closed_form(unsigned long n, const Rational& x);

/// Dense cache of K_s(j) over all 0 <= s, j <= n. Immutable once built and
/// safe to share read-only across threads.
class KrawtchoukTable {
 public:
  unsigned long n() const { return n_; }
  /// K_s(j); indices checked.
  const Rational& at(unsigned long s, unsigned long j) const;

 private:
  KrawtchoukTable(unsigned long n, bool parallel);
  unsigned long n_ = 0;
  std::vector<Rational> values_;  // row-major (n+1) x (n+1), entry (s, j)

  friend KrawtchoukTable build_table(unsigned long n);
  friend KrawtchoukTable build_table_serial(unsigned long n);
};

/// Fills the table with one recurrence per column, columns in parallel.
KrawtchoukTable build_table(unsigned long n);
/// Serial reference for the parallel kernel; identical output.
KrawtchoukTable build_table_serial(unsigned long n);

/// Encloses the smallest root of K_d on (0, n). low == high marks a root that
/// was located exactly; otherwise K_d changes sign strictly between the ends.
struct RootBracket {
  unsigned long n = 0;
  unsigned long degree = 0;
  Rational low;
  Rational high;
  bool exact() const { return low == high; }
  Rational width() const { return Rational(high - low); }
};

/// Bracket of width <= 1/denom_bound around the smallest root of K_d, located
/// by scanning integer points for the first sign change and bisecting with
/// exact sign evaluation. Requires 1 <= d <= n and denom_bound >= 1.
RootBracket first_root(unsigned long n, unsigned long d, const Integer& denom_bound);

/// floor of the smallest root of K_d, with the bracket that resolved it.
struct RootFloor {
  unsigned long floor = 0;
  RootBracket bracket;
};
RootFloor first_root_floor(unsigned long n, unsigned long d);

}  // namespace lpb
