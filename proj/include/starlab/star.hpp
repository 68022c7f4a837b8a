#ifndef STARLAB_STAR_HPP
#define STARLAB_STAR_HPP

#include <span>
#include <vector>

#include "starlab/rational.hpp"
#include "starlab/symbol.hpp"

namespace starlab {

// Coefficient I_{k,p} of the displaced-reference star product, as an exact
// rational.  Derived from the overlap kernel of two displaced number states:
//
//   I_{k,p} = (1/p!^2) * int_0^inf t^p e^{-t} (L_k(t))^2 dt
//           = sum_{j,j'=0}^k (-1)^{j+j'} C(k,j) C(k,j') (p+j+j')! / (j! j'! p!^2)
//
// I_{0,p} = 1/p! recovers the Voros weights, and I_{k,0} = 1 for every k by
// Laguerre orthonormality.
BigRational icoeff(int k, int p);

// Variant of the double sum without the 1/(j! j'!) factorial normalisation
// of the Laguerre expansion.  Coincides with icoeff for k <= 1 and diverges
// from the kernel moments at k >= 2; kept as a diagnostic so verification
// reports can show the difference.
BigRational icoeff_binomial_sum(int k, int p);

// Independent oracle: Gauss-Laguerre quadrature of the radial moment
// integral above.  Exact (to roundoff) once quad_nodes >= k + p + 1.
double icoeff_quadrature(int k, int p, int quad_nodes);

// Precomputed I_{k,p} values for p = 0..p_max, exact and float.
struct StarCoeffTable {
  int k = 0;
  std::vector<BigRational> exact;
  std::vector<double> values;
  std::vector<double> quadrature;

  static StarCoeffTable build(int k, int p_max, int quad_nodes = 64);
};

// Per-mode reference indices k_i of an extended star product; kvec = 0
// reduces to the Voros product.
struct ExtendedStarContext {
  std::vector<int> kvec;

  explicit ExtendedStarContext(std::vector<int> k) : kvec(std::move(k)) {}
  static ExtendedStarContext voros(int modes) {
    return ExtendedStarContext(std::vector<int>(modes, 0));
  }
  int modes() const { return static_cast<int>(kvec.size()); }
};

namespace detail {

// Shared bilinear kernel: sum over per-mode derivative orders p of
//   (prod_i I_{k_i, p_i}) (d^p/dz^p f) (d^p/dzbar^p g)
// with the commutative pointwise product.  Finite on polynomials.
template <class C>
BasicSymbol<C> star_kernel(const BasicSymbol<C>& f, const BasicSymbol<C>& g,
                           std::span<const int> kvec) {
  if (f.modes() != g.modes()) throw ModeMismatch("star: operand mode counts differ");
  const int nmodes = f.modes();
  if (static_cast<int>(kvec.size()) != nmodes)
    throw ModeMismatch("star: kvec length must equal mode count");

  std::vector<int> pmax(nmodes);
  for (int i = 0; i < nmodes; ++i)
    pmax[i] = std::min(f.max_z_degree(i), g.max_zbar_degree(i));

  BasicSymbol<C> acc(nmodes);
  std::vector<int> p(nmodes, 0);
  for (;;) {
    BasicSymbol<C> df = f;
    BasicSymbol<C> dg = g;
    for (int i = 0; i < nmodes; ++i) {
      if (p[i] == 0) continue;
      df = df.derive(i, false, p[i]);
      dg = dg.derive(i, true, p[i]);
    }
    if (!df.is_zero() && !dg.is_zero()) {
      BigRational w = 1;
      for (int i = 0; i < nmodes; ++i) w *= icoeff(kvec[i], p[i]);
      acc = acc + (df * dg).scaled(CoeffOps<C>::from_rational(w));
    }
    int i = 0;
    while (i < nmodes && p[i] == pmax[i]) p[i++] = 0;
    if (i == nmodes) break;
    ++p[i];
  }
  return acc;
}

}  // namespace detail

// Voros product f * g = sum_p (1/p!) (d^p_z f)(d^p_zbar g) per mode.
template <class C>
BasicSymbol<C> voros_star(const BasicSymbol<C>& f, const BasicSymbol<C>& g) {
  std::vector<int> zeros(f.modes(), 0);
  return detail::star_kernel(f, g, zeros);
}

template <class C>
BasicSymbol<C> extended_star(const BasicSymbol<C>& f, const BasicSymbol<C>& g,
                             const ExtendedStarContext& ctx) {
  return detail::star_kernel(f, g, ctx.kvec);
}

// Star commutator {f, g} = f * g - g * f under the context's product.
template <class C>
BasicSymbol<C> moyal_bracket(const BasicSymbol<C>& f, const BasicSymbol<C>& g,
                             const ExtendedStarContext& ctx) {
  return extended_star(f, g, ctx) - extended_star(g, f, ctx);
}

template <class C>
BasicSymbol<C> moyal_bracket(const BasicSymbol<C>& f, const BasicSymbol<C>& g) {
  return voros_star(f, g) - voros_star(g, f);
}

// Truncated star exponential sum_k f^{*k} / k!.  Symbol coefficients grow
// with the truncation order while pointwise evaluations converge, so
// convergence is judged at registered sample points, not coefficient-wise.
class StarSeries {
 public:
  StarSeries(PhaseSymbol sum, int terms, bool converged)
      : sum_(std::move(sum)), terms_(terms), converged_(converged) {}

  const PhaseSymbol& symbol() const { return sum_; }
  int terms() const { return terms_; }
  bool converged() const { return converged_; }
  std::complex<double> operator()(const SamplePoint& at) const { return sum_.eval(at); }

 private:
  PhaseSymbol sum_;
  int terms_;
  bool converged_;
};

StarSeries star_exp(const PhaseSymbol& f, const ExtendedStarContext& ctx, double tol,
                    int max_terms, std::span<const SamplePoint> samples);

}  // namespace starlab

#endif
