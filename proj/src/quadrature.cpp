#include "starlab/quadrature.hpp"

#include <Eigen/Dense>

#include "starlab/errors.hpp"

namespace starlab {

GaussLaguerreRule gauss_laguerre(int n) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  // Monic Laguerre recurrence p_{k+1} = (t - (2k+1)) p_k - k^2 p_{k-1}:
  // diagonal 2k+1, off-diagonal sqrt(k^2) = k.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) {
      jacobi(k, k + 1) = k + 1.0;
      jacobi(k + 1, k) = k + 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = v0 * v0;  // total mass int_0^inf e^{-t} dt = 1
  }
  return rule;
}

}  // namespace starlab
