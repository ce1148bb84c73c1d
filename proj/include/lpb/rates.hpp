#pragma once

#include <string>
#include <vector>

namespace lpb {

// Floating point lives only in this module; everything else in the library is
// exact rational.

struct RatePoint {
  double delta = 0;
  double r_gv = 0;
  double r_mrrw = 0;
  double r_avg = 0;
};

/// Gilbert-Varshamov rate 1 - H(delta) on [0, 1/2].
double r_gv(double delta);

/// First MRRW rate H(1/2 - sqrt(delta (1 - delta))) on [0, 1/2].
double r_mrrw(double delta);

/// (r_gv + r_mrrw) / 2 on the open interval (0, 1/2); a lower bound on the
/// asymptotic LP rate for almost-balanced codes.
double averaged_lower_bound(double delta);

/// Leading term n (1/2 - sqrt(delta (1 - delta))) of the smallest Krawtchouk
/// root x_d at d ~ delta n, for delta in (0, 1/2].
double x_d_asymptotic(double delta, unsigned long n);

/// One RatePoint per grid value, in order. Grid values must lie in (0, 1/2).
std::vector<RatePoint> rate_table(const std::vector<double>& grid);

/// "delta,r_gv,r_mrrw,r_avg" with fixed 6-decimal formatting.
std::string rate_csv_row(const RatePoint& p);

}  // namespace lpb
