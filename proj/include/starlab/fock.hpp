#ifndef STARLAB_FOCK_HPP
#define STARLAB_FOCK_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "starlab/symbol.hpp"

namespace starlab::fock {

// Truncated number basis with per-mode cutoff D.  Multi-mode basis states
// |n_0, .., n_{N-1}> are flattened row-major with mode 0 most significant:
// index = sum_i n_i * D^{N-1-i}.
struct FockSpace {
  int cutoff = 0;
  int modes = 1;

  long dim() const {
    long d = 1;
    for (int i = 0; i < modes; ++i) d *= cutoff;
    return d;
  }
  long index(const std::vector<int>& occ) const;
  std::vector<int> occupation(long index) const;

  friend bool operator==(const FockSpace&, const FockSpace&) = default;
};

struct FockOperator {
  FockSpace space;
  Eigen::MatrixXcd mat;
};

struct StateVector {
  FockSpace space;
  Eigen::VectorXcd amp;
  double truncation_loss = 0.0;  // squared-norm deficit of the dropped tail
};

enum class LadderKind { lower, raise };

// Single-mode annihilation matrix: <n-1| a |n> = sqrt(n).
Eigen::MatrixXcd ladder_matrix(int cutoff, LadderKind kind);

FockOperator ladder(const FockSpace& space, int mode, LadderKind kind);
FockOperator identity_operator(const FockSpace& space);

// D(z) = exp(z a+ - zbar a) at the cutoff, via scaling-and-squaring Pade.
Eigen::MatrixXcd displacement_matrix(int cutoff, std::complex<double> z);

// exp((xi/2) a+^2 - (conj xi / 2) a^2), the one-mode squeeze.
Eigen::MatrixXcd squeeze_matrix(int cutoff, std::complex<double> xi);

// Amplitudes <l| D(z) |k> of a single-mode displaced number state from the
// Laguerre closed form; k = 0 gives the standard coherent state.
Eigen::VectorXcd displaced_number_amplitudes(int cutoff, std::complex<double> z, int k);

StateVector coherent_vector(const std::vector<std::complex<double>>& z, int cutoff,
                            double loss_bound = 1e-10);

// Closed-form route (Laguerre amplitudes).
StateVector displaced_number_vector(const std::vector<std::complex<double>>& z,
                                    const std::vector<int>& k, int cutoff,
                                    double loss_bound = 1e-10);

// Matrix-exponential route D(z)|k>; an independent construction used to
// cross-validate the closed form.
StateVector displaced_number_vector_expm(const std::vector<std::complex<double>>& z,
                                         const std::vector<int>& k, int cutoff);

// sum_{m,n} c_{m,n} (a+)^m (a-)^n from a normal-ordered symbol.
FockOperator normal_ordered_operator(const PhaseSymbol& f, int cutoff);

std::complex<double> expectation(const FockOperator& op, const StateVector& psi);

// <z,k| O |z,k>; reference_k = 0 gives the coherent-state symbol.
std::complex<double> symbol_of(const FockOperator& op, const SamplePoint& at,
                               const std::vector<int>& reference_k);

// Operator-product star oracle <z,k| O_f O_g |z,k>.  For reference_k = 0
// this is the definitional Voros product of the two symbols.
std::complex<double> star_oracle(const PhaseSymbol& f, const PhaseSymbol& g,
                                 const SamplePoint& at, const std::vector<int>& reference_k);

// Cap for oracle matrix sizes; reads STARLAB_MAX_CUTOFF, default 512.
int max_cutoff();

}  // namespace starlab::fock

#endif
