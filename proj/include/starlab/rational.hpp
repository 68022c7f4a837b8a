#ifndef STARLAB_RATIONAL_HPP
#define STARLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>

namespace starlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

// Complex number with exact rational parts.  std::complex is only specified
// for the builtin floating types, so the exact coefficient mode carries its
// own minimal complex arithmetic.
struct RationalComplex {
  BigRational re{0};
  BigRational im{0};

  RationalComplex() = default;
  RationalComplex(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  explicit RationalComplex(long v) : re(v), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline RationalComplex conj(const RationalComplex& v) { return {v.re, -v.im}; }

inline std::complex<double> to_complex(const RationalComplex& v) {
  return {to_double(v.re), to_double(v.im)};
}

// Scalar operations a symbol needs from its coefficient type.  Specialised
// for std::complex<double> (numeric mode) and RationalComplex (exact mode).
template <class C>
struct CoeffOps;

template <>
struct CoeffOps<std::complex<double>> {
  using value_type = std::complex<double>;
  static value_type zero() { return {0.0, 0.0}; }
  static value_type one() { return {1.0, 0.0}; }
  static bool is_zero(const value_type& v) { return v.real() == 0.0 && v.imag() == 0.0; }
  static value_type from_rational(const BigRational& q) { return {to_double(q), 0.0}; }
  static value_type from_count(std::uint64_t n) { return {static_cast<double>(n), 0.0}; }
  static value_type conjugate(const value_type& v) { return std::conj(v); }
  static std::complex<double> to_complex(const value_type& v) { return v; }
};

template <>
struct CoeffOps<RationalComplex> {
  using value_type = RationalComplex;
  static value_type zero() { return {}; }
  static value_type one() { return {BigRational(1), BigRational(0)}; }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  static value_type from_rational(const BigRational& q) { return {q, BigRational(0)}; }
  static value_type from_count(std::uint64_t n) {
    return {BigRational(static_cast<unsigned long long>(n)), BigRational(0)};
  }
  static value_type conjugate(const value_type& v) { return conj(v); }
  static std::complex<double> to_complex(const value_type& v) { return starlab::to_complex(v); }
};

}  // namespace starlab

#endif
