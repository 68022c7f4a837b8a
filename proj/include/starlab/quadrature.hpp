#ifndef STARLAB_QUADRATURE_HPP
#define STARLAB_QUADRATURE_HPP

#include <vector>

namespace starlab {

// Gauss-Laguerre rule for integrals of the form  int_0^inf f(t) e^{-t} dt,
// exact for polynomial f up to degree 2n-1.  Nodes and weights come from the
// Golub-Welsch eigenproblem of the Laguerre Jacobi matrix.
struct GaussLaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLaguerreRule gauss_laguerre(int n);

}  // namespace starlab

#endif
