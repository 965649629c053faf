#include <cmath>
#include <limits>

#include "tsgpr/catalog.hpp"
#include "tsgpr/error.hpp"

namespace tsgpr {

namespace {

// Lower incomplete gamma by series, valid for x < s + 1.
double lower_gamma_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < 500; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return std::pow(x, s) * std::exp(-x) * sum;
}

// Upper incomplete gamma by modified Lentz continued fraction, x >= s + 1.
double upper_gamma_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x + s * std::log(x)) * h;
}

}  // namespace

double upper_incomplete_gamma(double s, double x) {
  if (!(s > 0.0)) throw DomainError("upper_incomplete_gamma requires s > 0");
  if (x < 0.0) throw DomainError("upper_incomplete_gamma requires x >= 0");
  if (x == 0.0) return std::tgamma(s);
  if (x < s + 1.0) return std::tgamma(s) - lower_gamma_series(s, x);
  return upper_gamma_cf(s, x);
}

}  // namespace tsgpr
