#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace tiltgrowth {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Decimal digits used by all Real/Complex computations. Exact (Int/Rat)
// arithmetic is unaffected.
inline void set_precision(unsigned digits10) {
  Real::default_precision(digits10);
}
inline unsigned precision() { return Real::default_precision(); }

// Minimal complex arithmetic over Real. boost.multiprecision has no
// mpc-backed complex on this toolchain, and we only need the handful of
// entire functions below.
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& b) {
    return {s * b.re, s * b.im};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Complex operator/(const Complex& a, const Real& s) {
    return {a.re / s, a.im / s};
  }
};

inline Real abs(const Complex& z) {
  return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}
inline Complex log(const Complex& z) {
  return {boost::multiprecision::log(abs(z)), atan2(z.im, z.re)};
}
// x^w for real x > 0: exp(w ln x), with a real logarithm.
inline Complex pow(const Real& x, const Complex& w) {
  Real lx = boost::multiprecision::log(x);
  return exp(Complex{w.re * lx, w.im * lx});
}
inline Complex pow(const Complex& z, const Complex& w) {
  return exp(w * log(z));
}
inline Complex sin(const Complex& z) {
  using boost::multiprecision::cosh;
  using boost::multiprecision::sinh;
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

// Error taxonomy shared by all modules.
struct not_in_image_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_in_cone_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct property_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime_number(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(int p, const char* what) {
  if (!is_prime_number(p))
    throw std::invalid_argument(std::string(what) + ": p must be prime, got " +
                                std::to_string(p));
}

}  // namespace tiltgrowth
