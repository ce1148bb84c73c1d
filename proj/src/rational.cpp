#include "lpb/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace lpb {

Integer binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Integer isqrt_floor(const Integer& m) {
  if (m < 0) throw std::domain_error("isqrt_floor: negative input");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer pow2(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

Integer rational_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

double rational_log2(const Rational& r) {
  if (r <= 0) throw std::domain_error("rational_log2: nonpositive input");
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
  return (std::log2(mn) + static_cast<double>(en)) - (std::log2(md) + static_cast<double>(ed));
}

std::string rational_to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(std::string_view s) {
  // strict grammar: [-]digits[/digits], no whitespace, nonzero denominator
  auto bad = [&] { throw std::invalid_argument("rational_from_string: malformed '" + std::string(s) + "'"); };
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) bad();
  std::size_t den_begin = std::string_view::npos;
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) bad();
  }
  Integer num(std::string(s.substr(0, den_begin == std::string_view::npos ? s.size() : den_begin - 1)));
  Integer den = den_begin == std::string_view::npos ? Integer(1) : Integer(std::string(s.substr(den_begin)));
  if (den == 0) bad();
  Rational r;
  r.get_num() = num;
  r.get_den() = den;
  r.canonicalize();
  return r;
}

}  // namespace lpb
