#ifndef STARLAB_SPECFUN_HPP
#define STARLAB_SPECFUN_HPP

#include "starlab/errors.hpp"

namespace starlab::specfun {

struct SeriesConfig {
  double rel_tol = 1e-14;
  int max_terms = 500;
};

struct LaguerreSpec {
  int n = 0;        // degree
  double alpha = 0; // superscript order
  double x = 0;
};

// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence
// (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1},  L_0 = 1,
// L_1 = 1 + alpha - x.
double laguerre(const LaguerreSpec& spec);
double laguerre(int n, double alpha, double x);

// Confluent hypergeometric limit 0F1(b; x) = sum_m x^m / ((b)_m m!).
double hyp0f1(double b, double x, const SeriesConfig& cfg = {});

// Modified Bessel I_nu(y) = (y/2)^nu / Gamma(nu+1) * 0F1(nu+1; y^2/4),
// real nu >= 0, y >= 0.
double bessel_i(double nu, double y, const SeriesConfig& cfg = {});

// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace starlab::specfun

#endif
