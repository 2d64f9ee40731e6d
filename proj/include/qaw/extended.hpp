#pragma once

// Extended-precision scalar used where double precision is provably not
// enough: high-order q-differences amplify rounding by ~q^{-n^2/2}.

#include <complex>

#include <boost/multiprecision/mpfr.hpp>

namespace qaw {

inline constexpr unsigned kExtendedDigits = 500;

using ExtReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kExtendedDigits>,
                                              boost::multiprecision::et_off>;

struct ExtComplex {
  ExtReal re;
  ExtReal im;

  ExtComplex() : re(0), im(0) {}
  ExtComplex(ExtReal r, ExtReal i = ExtReal(0)) : re(std::move(r)), im(std::move(i)) {}
  explicit ExtComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  ExtReal norm() const { return re * re + im * im; }
  double magnitude() const { return static_cast<double>(sqrt(norm())); }

  friend ExtComplex operator+(const ExtComplex& a, const ExtComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend ExtComplex operator-(const ExtComplex& a, const ExtComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend ExtComplex operator*(const ExtComplex& a, const ExtComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExtComplex operator/(const ExtComplex& a, const ExtComplex& b) {
    const ExtReal d = b.norm();
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  ExtComplex& operator+=(const ExtComplex& o) { return *this = *this + o; }
  ExtComplex& operator*=(const ExtComplex& o) { return *this = *this * o; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// (a;q)_inf in extended precision, factors kept until |a q^k| < 10^-digits.
ExtComplex q_pochhammer_infinite_ext(const ExtComplex& a, const ExtReal& q);

}  // namespace qaw
