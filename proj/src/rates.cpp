#include "lpb/rates.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lpb/rational.hpp"

namespace lpb {

namespace {

void require_closed(double delta, const char* who) {
  if (!(delta >= 0.0 && delta <= 0.5))
    throw std::domain_error(std::string(who) + ": delta outside [0, 1/2]");
}

void require_open(double delta, const char* who) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::domain_error(std::string(who) + ": delta outside (0, 1/2)");
}

}  // namespace

double r_gv(double delta) {
  require_closed(delta, "r_gv");
  return 1.0 - binary_entropy(delta);
}

double r_mrrw(double delta) {
  require_closed(delta, "r_mrrw");
  return binary_entropy(0.5 - std::sqrt(delta * (1.0 - delta)));
}

double averaged_lower_bound(double delta) {
  require_open(delta, "averaged_lower_bound");
  return (r_gv(delta) + r_mrrw(delta)) / 2.0;
}

double x_d_asymptotic(double delta, unsigned long n) {
  if (!(delta > 0.0 && delta <= 0.5))
    throw std::domain_error("x_d_asymptotic: delta outside (0, 1/2]");
  return static_cast<double>(n) * (0.5 - std::sqrt(delta * (1.0 - delta)));
}

std::vector<RatePoint> rate_table(const std::vector<double>& grid) {
  std::vector<RatePoint> out;
  out.reserve(grid.size());
  for (double delta : grid) {
    require_open(delta, "rate_table");
    RatePoint p;
    p.delta = delta;
    p.r_gv = r_gv(delta);
    p.r_mrrw = r_mrrw(delta);
    p.r_avg = averaged_lower_bound(delta);
    out.push_back(p);
  }
  return out;
}

std::string rate_csv_row(const RatePoint& p) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f", p.delta, p.r_gv, p.r_mrrw, p.r_avg);
  return buf;
}

}  // namespace lpb
