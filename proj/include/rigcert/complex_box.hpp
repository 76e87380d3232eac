#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "rigcert/interval.hpp"

namespace rigcert {

/// Raised when an enclosure overflows to an unbounded interval.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Rectangular enclosure re + i*im of a complex number.
class ComplexBox {
 public:
  ComplexBox() = default;
  explicit ComplexBox(Interval re, Interval im = Interval()) : re_(std::move(re)), im_(std::move(im)) {}
  /// Exact box around a pair of doubles.
  explicit ComplexBox(std::complex<double> z, Precision bits = 53);

  static ComplexBox i(Precision bits = kDefaultPrecision);

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }
  Precision precision() const { return std::max(re_.precision(), im_.precision()); }

  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool contains(std::complex<double> z) const { return re_.contains(z.real()) && im_.contains(z.imag()); }
  /// max(width(re), width(im)).
  double width() const;
  std::complex<double> midpoint() const { return {re_.midpoint(), im_.midpoint()}; }

  ComplexBox& operator+=(const ComplexBox& rhs);
  ComplexBox& operator-=(const ComplexBox& rhs);
  ComplexBox& operator*=(const ComplexBox& rhs);

  std::string to_string(int digits = 17) const;

 private:
  Interval re_;
  Interval im_;
};

ComplexBox operator-(const ComplexBox& z);
ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const Interval& a, const ComplexBox& b);
ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);

ComplexBox conj(const ComplexBox& z);
/// Enclosure of |z| = hypot(re, im); the lower bound is clamped at 0.
Interval modulus(const ComplexBox& z);
/// e^z = e^re (cos im + i sin im). Throws OverflowError when unbounded.
ComplexBox complex_exp(const ComplexBox& z);
/// Principal logarithm; the box must stay off the closed negative real axis.
ComplexBox complex_log(const ComplexBox& z);
/// Principal power base^exponent = exp(exponent * Log base).
ComplexBox complex_pow(const ComplexBox& base, const ComplexBox& exponent);

}  // namespace rigcert
