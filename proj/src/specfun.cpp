#include "starlab/specfun.hpp"

#include <cmath>
#include <string>

namespace starlab::specfun {

double laguerre(const LaguerreSpec& spec) { return laguerre(spec.n, spec.alpha, spec.x); }

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("laguerre: degree must be nonnegative");
  if (n == 0) return 1.0;
  double lm1 = 1.0;
  double l = 1.0 + alpha - x;
  for (int i = 1; i < n; ++i) {
    double lp1 = ((2.0 * i + 1.0 + alpha - x) * l - (i + alpha) * lm1) / (i + 1.0);
    lm1 = l;
    l = lp1;
  }
  return l;
}

double hyp0f1(double b, double x, const SeriesConfig& cfg) {
  if (b <= 0.0 && b == std::floor(b))
    throw DomainError("hyp0f1: b must not be a nonpositive integer");
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < cfg.max_terms; ++m) {
    term *= x / ((b + m) * (m + 1.0));
    sum += term;
    if (std::abs(term) <= cfg.rel_tol * std::abs(sum)) return sum;
  }
  throw NonConvergence("hyp0f1: series did not reach tolerance in " +
                       std::to_string(cfg.max_terms) + " terms");
}

double bessel_i(double nu, double y, const SeriesConfig& cfg) {
  if (y < 0.0) throw DomainError("bessel_i: argument must be nonnegative");
  if (y == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  double lead = std::exp(nu * std::log(0.5 * y) - log_gamma(nu + 1.0));
  return lead * hyp0f1(nu + 1.0, 0.25 * y * y, cfg);
}

double log_gamma(double x) {
  if (x <= 0.0) throw DomainError("log_gamma: argument must be positive");
  return std::lgamma(x);
}

}  // namespace starlab::specfun
