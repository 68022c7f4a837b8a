#ifndef STARLAB_SYMBOL_HPP
#define STARLAB_SYMBOL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "starlab/errors.hpp"
#include "starlab/rational.hpp"

namespace starlab {

struct SamplePoint {
  std::vector<std::complex<double>> z;

  SamplePoint() = default;
  explicit SamplePoint(std::complex<double> z0) : z{z0} {}
  explicit SamplePoint(std::vector<std::complex<double>> zz) : z(std::move(zz)) {}
  int modes() const { return static_cast<int>(z.size()); }
};

// Exponent pair of a normal-ordered monomial zbar^m z^n over N modes.
// Ordering is graded lexicographic: total degree first, then the
// concatenated tuple (m_0..m_{N-1}, n_0..n_{N-1}).  Serialized symbols
// inherit this ordering, which keeps them byte-stable.
struct Monomial {
  std::vector<std::uint32_t> m;  // zbar exponents
  std::vector<std::uint32_t> n;  // z exponents

  int degree() const {
    int d = 0;
    for (auto v : m) d += static_cast<int>(v);
    for (auto v : n) d += static_cast<int>(v);
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.m == b.m && a.n == b.n;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.m != b.m) return a.m < b.m;
    return a.n < b.n;
  }
};

// Finite normal-ordered polynomial sum_{m,n} c_{m,n} zbar^m z^n over N
// modes.  Immutable in spirit: every operation returns a new symbol.  The
// coefficient type is either std::complex<double> or RationalComplex; the
// exact mode exists so that identities that hold as polynomial identities
// can be asserted with equality rather than tolerances.
template <class Coeff>
class BasicSymbol {
 public:
  using coeff_type = Coeff;
  using ops = CoeffOps<Coeff>;
  using term_map = std::map<Monomial, Coeff>;

  explicit BasicSymbol(int modes = 1) : modes_(modes) {
    if (modes < 1) throw DomainError("symbol: mode count must be positive");
  }

  static BasicSymbol constant(int modes, const Coeff& c) {
    BasicSymbol s(modes);
    Monomial mono;
    mono.m.assign(modes, 0);
    mono.n.assign(modes, 0);
    s.add_term(mono, c);
    return s;
  }

  static BasicSymbol zero(int modes) { return BasicSymbol(modes); }

  static BasicSymbol one(int modes) { return constant(modes, ops::one()); }

  // The degree-one generator z_mode (conjugated=false) or zbar_mode.
  static BasicSymbol generator(int modes, int mode, bool conjugated) {
    BasicSymbol s(modes);
    if (mode < 0 || mode >= modes) throw IndexError("symbol: generator mode out of range");
    Monomial mono;
    mono.m.assign(modes, 0);
    mono.n.assign(modes, 0);
    if (conjugated)
      mono.m[mode] = 1;
    else
      mono.n[mode] = 1;
    s.add_term(mono, ops::one());
    return s;
  }

  int modes() const { return modes_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? ops::zero() : it->second;
  }

  void add_term(const Monomial& mono, const Coeff& c) {
    if (static_cast<int>(mono.m.size()) != modes_ || static_cast<int>(mono.n.size()) != modes_)
      throw ModeMismatch("symbol: exponent vectors must match mode count");
    if (ops::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second = it->second + c;
      if (ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  friend BasicSymbol operator+(const BasicSymbol& a, const BasicSymbol& b) {
    check_modes(a, b);
    BasicSymbol r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
    return r;
  }

  friend BasicSymbol operator-(const BasicSymbol& a, const BasicSymbol& b) {
    check_modes(a, b);
    BasicSymbol r = a;
    for (const auto& [mono, c] : b.terms_) r.add_term(mono, -c);
    return r;
  }

  friend BasicSymbol operator-(const BasicSymbol& a) {
    BasicSymbol r(a.modes_);
    for (const auto& [mono, c] : a.terms_) r.terms_.emplace(mono, -c);
    return r;
  }

  BasicSymbol scaled(const Coeff& s) const {
    BasicSymbol r(modes_);
    if (ops::is_zero(s)) return r;
    for (const auto& [mono, c] : terms_) {
      Coeff v = c * s;
      if (!ops::is_zero(v)) r.terms_.emplace(mono, v);
    }
    return r;
  }

  // Commutative pointwise product, distinct from any star product.
  friend BasicSymbol operator*(const BasicSymbol& a, const BasicSymbol& b) {
    check_modes(a, b);
    BasicSymbol r(a.modes_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial mono;
        mono.m.resize(a.modes_);
        mono.n.resize(a.modes_);
        for (int i = 0; i < a.modes_; ++i) {
          mono.m[i] = ma.m[i] + mb.m[i];
          mono.n[i] = ma.n[i] + mb.n[i];
        }
        r.add_term(mono, ca * cb);
      }
    }
    return r;
  }

  // Formal order-th partial derivative in z_mode (conjugated=false) or
  // zbar_mode (conjugated=true).
  BasicSymbol derive(int mode, bool conjugated, int order = 1) const {
    if (mode < 0 || mode >= modes_) throw IndexError("symbol: derive mode out of range");
    if (order < 0) throw DomainError("symbol: derivative order must be nonnegative");
    if (order == 0) return *this;
    BasicSymbol r(modes_);
    for (const auto& [mono, c] : terms_) {
      std::uint32_t e = conjugated ? mono.m[mode] : mono.n[mode];
      if (static_cast<int>(e) < order) continue;
      Coeff v = c;
      for (int j = 0; j < order; ++j) v = v * ops::from_count(e - j);
      Monomial dm = mono;
      if (conjugated)
        dm.m[mode] = e - order;
      else
        dm.n[mode] = e - order;
      r.add_term(dm, v);
    }
    return r;
  }

  // Symbol of the complex conjugate function: coefficients swap exponents
  // and conjugate, since conj(zbar^m z^n) = zbar^n z^m.
  BasicSymbol conjugated() const {
    BasicSymbol r(modes_);
    for (const auto& [mono, c] : terms_) {
      Monomial sw;
      sw.m = mono.n;
      sw.n = mono.m;
      r.add_term(sw, ops::conjugate(c));
    }
    return r;
  }

  std::complex<double> eval(const SamplePoint& at) const {
    if (at.modes() != modes_) throw ModeMismatch("symbol: sample point has wrong mode count");
    std::complex<double> sum = 0.0;
    for (const auto& [mono, c] : terms_) {
      std::complex<double> v = ops::to_complex(c);
      for (int i = 0; i < modes_; ++i) {
        v *= ipow(std::conj(at.z[i]), mono.m[i]) * ipow(at.z[i], mono.n[i]);
      }
      sum += v;
    }
    return sum;
  }

  int max_z_degree(int mode) const { return max_degree(mode, false); }
  int max_zbar_degree(int mode) const { return max_degree(mode, true); }

  int total_degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
  }

  // Largest |coefficient|; gauges symbol-level residuals.
  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [mono, c] : terms_) m = std::max(m, std::abs(ops::to_complex(c)));
    return m;
  }

 private:
  static void check_modes(const BasicSymbol& a, const BasicSymbol& b) {
    if (a.modes_ != b.modes_) throw ModeMismatch("symbol: mode counts differ");
  }

  static std::complex<double> ipow(std::complex<double> base, std::uint32_t e) {
    std::complex<double> r = 1.0;
    while (e) {
      if (e & 1u) r *= base;
      base *= base;
      e >>= 1u;
    }
    return r;
  }

  int max_degree(int mode, bool conjugated) const {
    if (mode < 0 || mode >= modes_) throw IndexError("symbol: mode out of range");
    int d = 0;
    for (const auto& [mono, c] : terms_)
      d = std::max(d, static_cast<int>(conjugated ? mono.m[mode] : mono.n[mode]));
    return d;
  }

  int modes_;
  term_map terms_;
};

using PhaseSymbol = BasicSymbol<std::complex<double>>;
using RationalSymbol = BasicSymbol<RationalComplex>;

inline PhaseSymbol to_phase_symbol(const RationalSymbol& s) {
  PhaseSymbol r(s.modes());
  for (const auto& [mono, c] : s.terms()) r.add_term(mono, to_complex(c));
  return r;
}

// max |coefficient difference|; exact zero iff the symbols agree termwise.
template <class Coeff>
double max_coeff_distance(const BasicSymbol<Coeff>& a, const BasicSymbol<Coeff>& b) {
  return (a - b).max_abs_coeff();
}

inline bool identical(const RationalSymbol& a, const RationalSymbol& b) {
  return (a - b).is_zero();
}

}  // namespace starlab

#endif
