#include "starlab/fock.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdlib>
#include <string>

#include "starlab/specfun.hpp"

namespace starlab::fock {

long FockSpace::index(const std::vector<int>& occ) const {
  long idx = 0;
  for (int i = 0; i < modes; ++i) idx = idx * cutoff + occ[i];
  return idx;
}

std::vector<int> FockSpace::occupation(long index) const {
  std::vector<int> occ(modes);
  for (int i = modes - 1; i >= 0; --i) {
    occ[i] = static_cast<int>(index % cutoff);
    index /= cutoff;
  }
  return occ;
}

Eigen::MatrixXcd ladder_matrix(int cutoff, LadderKind kind) {
  if (cutoff < 2) throw DomainError("ladder_matrix: cutoff must be at least 2");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return kind == LadderKind::lower ? a : Eigen::MatrixXcd(a.adjoint());
}

namespace {

// Embed a single-mode matrix acting on `mode`, identity elsewhere.
Eigen::MatrixXcd embed(const FockSpace& space, int mode, const Eigen::MatrixXcd& m) {
  const long dim = space.dim();
  long stride = 1;
  for (int i = mode + 1; i < space.modes; ++i) stride *= space.cutoff;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  for (long idx = 0; idx < dim; ++idx) {
    int n = static_cast<int>((idx / stride) % space.cutoff);
    long base = idx - n * stride;
    for (int np = 0; np < space.cutoff; ++np) {
      std::complex<double> v = m(np, n);
      if (v != 0.0) full(base + np * stride, idx) += v;
    }
  }
  return full;
}

Eigen::VectorXcd tensor(const FockSpace& space,
                        const std::vector<Eigen::VectorXcd>& per_mode) {
  Eigen::VectorXcd full = Eigen::VectorXcd::Ones(1);
  for (const auto& v : per_mode) {
    Eigen::VectorXcd next(full.size() * v.size());
    for (long i = 0; i < full.size(); ++i)
      for (long j = 0; j < v.size(); ++j) next(i * v.size() + j) = full(i) * v(j);
    full = std::move(next);
  }
  (void)space;
  return full;
}

StateVector assemble_state(const std::vector<Eigen::VectorXcd>& per_mode, int cutoff,
                           double loss_bound, bool enforce_bound) {
  FockSpace space{cutoff, static_cast<int>(per_mode.size())};
  StateVector psi;
  psi.space = space;
  psi.amp = tensor(space, per_mode);
  double kept = 1.0;
  for (const auto& v : per_mode) kept *= v.squaredNorm();
  psi.truncation_loss = std::max(0.0, 1.0 - kept);
  if (enforce_bound && psi.truncation_loss > loss_bound)
    throw TruncationError("state: truncation loss " + std::to_string(psi.truncation_loss) +
                          " exceeds bound " + std::to_string(loss_bound));
  return psi;
}

}  // namespace

FockOperator ladder(const FockSpace& space, int mode, LadderKind kind) {
  if (mode < 0 || mode >= space.modes) throw IndexError("ladder: mode out of range");
  return {space, embed(space, mode, ladder_matrix(space.cutoff, kind))};
}

FockOperator identity_operator(const FockSpace& space) {
  return {space, Eigen::MatrixXcd::Identity(space.dim(), space.dim())};
}

Eigen::MatrixXcd displacement_matrix(int cutoff, std::complex<double> z) {
  Eigen::MatrixXcd gen =
      z * ladder_matrix(cutoff, LadderKind::raise) - std::conj(z) * ladder_matrix(cutoff, LadderKind::lower);
  return gen.exp();
}

Eigen::MatrixXcd squeeze_matrix(int cutoff, std::complex<double> xi) {
  Eigen::MatrixXcd ap = ladder_matrix(cutoff, LadderKind::raise);
  Eigen::MatrixXcd am = ladder_matrix(cutoff, LadderKind::lower);
  Eigen::MatrixXcd gen = 0.5 * xi * ap * ap - 0.5 * std::conj(xi) * am * am;
  return gen.exp();
}

Eigen::VectorXcd displaced_number_amplitudes(int cutoff, std::complex<double> z, int k) {
  if (k < 0 || k >= cutoff) throw IndexError("displaced_number_amplitudes: k out of range");
  const double t = std::norm(z);
  const double gauss = std::exp(-0.5 * t);
  Eigen::VectorXcd amp(cutoff);
  for (int l = 0; l < cutoff; ++l) {
    if (l < k) {
      // <l|D(z)|k> = sqrt(l!/k!) (-zbar)^{k-l} L_l^{k-l}(t) e^{-t/2}
      double ratio = std::exp(0.5 * (specfun::log_gamma(l + 1.0) - specfun::log_gamma(k + 1.0)));
      std::complex<double> pw = 1.0;
      for (int j = 0; j < k - l; ++j) pw *= -std::conj(z);
      amp(l) = ratio * pw * specfun::laguerre(l, static_cast<double>(k - l), t) * gauss;
    } else {
      // <l|D(z)|k> = sqrt(k!/l!) z^{l-k} L_k^{l-k}(t) e^{-t/2}
      double ratio = std::exp(0.5 * (specfun::log_gamma(k + 1.0) - specfun::log_gamma(l + 1.0)));
      std::complex<double> pw = 1.0;
      for (int j = 0; j < l - k; ++j) pw *= z;
      amp(l) = ratio * pw * specfun::laguerre(k, static_cast<double>(l - k), t) * gauss;
    }
  }
  return amp;
}

StateVector coherent_vector(const std::vector<std::complex<double>>& z, int cutoff,
                            double loss_bound) {
  std::vector<int> k(z.size(), 0);
  return displaced_number_vector(z, k, cutoff, loss_bound);
}

StateVector displaced_number_vector(const std::vector<std::complex<double>>& z,
                                    const std::vector<int>& k, int cutoff,
                                    double loss_bound) {
  if (z.size() != k.size())
    throw ModeMismatch("displaced_number_vector: z and k length mismatch");
  std::vector<Eigen::VectorXcd> per_mode;
  per_mode.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i)
    per_mode.push_back(displaced_number_amplitudes(cutoff, z[i], k[i]));
  return assemble_state(per_mode, cutoff, loss_bound, true);
}

StateVector displaced_number_vector_expm(const std::vector<std::complex<double>>& z,
                                         const std::vector<int>& k, int cutoff) {
  if (z.size() != k.size())
    throw ModeMismatch("displaced_number_vector_expm: z and k length mismatch");
  std::vector<Eigen::VectorXcd> per_mode;
  per_mode.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (k[i] < 0 || k[i] >= cutoff)
      throw IndexError("displaced_number_vector_expm: k out of range");
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(cutoff);
    basis(k[i]) = 1.0;
    per_mode.push_back(displacement_matrix(cutoff, z[i]) * basis);
  }
  return assemble_state(per_mode, cutoff, 0.0, false);
}

FockOperator normal_ordered_operator(const PhaseSymbol& f, int cutoff) {
  const int nmodes = f.modes();
  FockSpace space{cutoff, nmodes};
  int degree = f.total_degree();
  if (degree >= cutoff)
    throw TruncationError("normal_ordered_operator: symbol degree exceeds cutoff");

  // Per-mode powers of the single-mode ladder matrices.
  std::vector<Eigen::MatrixXcd> raise_pow{Eigen::MatrixXcd::Identity(cutoff, cutoff)};
  std::vector<Eigen::MatrixXcd> lower_pow{Eigen::MatrixXcd::Identity(cutoff, cutoff)};
  Eigen::MatrixXcd ap = ladder_matrix(cutoff, LadderKind::raise);
  Eigen::MatrixXcd am = ladder_matrix(cutoff, LadderKind::lower);
  for (int d = 1; d <= degree; ++d) {
    raise_pow.push_back(raise_pow.back() * ap);
    lower_pow.push_back(lower_pow.back() * am);
  }

  const long dim = space.dim();
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Eigen::MatrixXcd> factor(nmodes);
  for (const auto& [mono, c] : f.terms()) {
    for (int i = 0; i < nmodes; ++i) factor[i] = raise_pow[mono.m[i]] * lower_pow[mono.n[i]];
    for (long r = 0; r < dim; ++r) {
      auto rocc = space.occupation(r);
      for (long col = 0; col < dim; ++col) {
        auto cocc = space.occupation(col);
        std::complex<double> v = c;
        for (int i = 0; i < nmodes && v != 0.0; ++i) v *= factor[i](rocc[i], cocc[i]);
        if (v != 0.0) full(r, col) += v;
      }
    }
  }
  return {space, std::move(full)};
}

std::complex<double> expectation(const FockOperator& op, const StateVector& psi) {
  if (!(op.space == psi.space)) throw ModeMismatch("expectation: operator/state space mismatch");
  return psi.amp.dot(op.mat * psi.amp);  // Eigen's dot conjugates the left argument
}

std::complex<double> symbol_of(const FockOperator& op, const SamplePoint& at,
                               const std::vector<int>& reference_k) {
  if (at.modes() != op.space.modes) throw ModeMismatch("symbol_of: point mode count differs");
  StateVector psi = displaced_number_vector(at.z, reference_k, op.space.cutoff);
  return expectation(op, psi);
}

std::complex<double> star_oracle(const PhaseSymbol& f, const PhaseSymbol& g,
                                 const SamplePoint& at, const std::vector<int>& reference_k) {
  if (f.modes() != g.modes()) throw ModeMismatch("star_oracle: operand mode counts differ");
  int cutoff = std::min(f.modes() > 1 ? 32 : 48, max_cutoff());
  FockOperator of = normal_ordered_operator(f, cutoff);
  FockOperator og = normal_ordered_operator(g, cutoff);
  StateVector psi = displaced_number_vector(at.z, reference_k, cutoff);
  return psi.amp.dot(of.mat * (og.mat * psi.amp));
}

int max_cutoff() {
  if (const char* env = std::getenv("STARLAB_MAX_CUTOFF")) {
    int v = std::atoi(env);
    if (v >= 2) return v;
  }
  return 512;
}

}  // namespace starlab::fock
