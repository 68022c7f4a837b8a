#include "starlab/star.hpp"

#include <cmath>
#include <string>

#include "starlab/quadrature.hpp"
#include "starlab/specfun.hpp"

namespace starlab {

BigRational icoeff(int k, int p) {
  if (k < 0 || p < 0) throw DomainError("icoeff: indices must be nonnegative");
  BigInt psq = factorial(p) * factorial(p);
  BigRational sum = 0;
  for (int j = 0; j <= k; ++j) {
    for (int jp = 0; jp <= k; ++jp) {
      BigInt num = factorial(p + j + jp) * binomial(k, j) * binomial(k, jp);
      BigInt den = factorial(j) * factorial(jp) * psq;
      BigRational term(num, den);
      if ((j + jp) % 2) sum -= term;
      else sum += term;
    }
  }
  return sum;
}

BigRational icoeff_binomial_sum(int k, int p) {
  if (k < 0 || p < 0) throw DomainError("icoeff: indices must be nonnegative");
  BigInt psq = factorial(p) * factorial(p);
  BigRational sum = 0;
  for (int j = 0; j <= k; ++j) {
    for (int jp = 0; jp <= k; ++jp) {
      BigRational term(factorial(p + j + jp) * binomial(k, j) * binomial(k, jp), psq);
      if ((j + jp) % 2) sum -= term;
      else sum += term;
    }
  }
  return sum;
}

double icoeff_quadrature(int k, int p, int quad_nodes) {
  if (quad_nodes < k + p + 1)
    throw DomainError("icoeff_quadrature: need at least k + p + 1 nodes");
  GaussLaguerreRule rule = gauss_laguerre(quad_nodes);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double t = rule.nodes[i];
    double lk = specfun::laguerre(k, 0.0, t);
    sum += rule.weights[i] * std::pow(t, p) * lk * lk;
  }
  return sum / (to_double(BigRational(factorial(p))) * to_double(BigRational(factorial(p))));
}

StarCoeffTable StarCoeffTable::build(int k, int p_max, int quad_nodes) {
  StarCoeffTable table;
  table.k = k;
  table.exact.reserve(p_max + 1);
  table.values.reserve(p_max + 1);
  table.quadrature.reserve(p_max + 1);
  int nodes = std::max(quad_nodes, k + p_max + 1);
  for (int p = 0; p <= p_max; ++p) {
    BigRational v = icoeff(k, p);
    table.exact.push_back(v);
    table.values.push_back(to_double(v));
    table.quadrature.push_back(icoeff_quadrature(k, p, nodes));
  }
  return table;
}

StarSeries star_exp(const PhaseSymbol& f, const ExtendedStarContext& ctx, double tol,
                    int max_terms, std::span<const SamplePoint> samples) {
  if (tol <= 0) throw DomainError("star_exp: tolerance must be positive");
  if (samples.empty()) throw DomainError("star_exp: register at least one sample point");
  if (ctx.modes() != f.modes()) throw ModeMismatch("star_exp: context mode count differs");

  PhaseSymbol sum = PhaseSymbol::one(f.modes());
  PhaseSymbol term = sum;
  for (int k = 1; k <= max_terms; ++k) {
    term = extended_star(term, f, ctx).scaled({1.0 / k, 0.0});
    sum = sum + term;
    double inc = 0.0;
    for (const auto& pt : samples) inc = std::max(inc, std::abs(term.eval(pt)));
    if (inc < tol) return StarSeries(std::move(sum), k + 1, true);
  }
  throw NonConvergence("star_exp: no convergence after " + std::to_string(max_terms) +
                       " terms");
}

}  // namespace starlab
