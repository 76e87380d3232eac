#include "rigcert/complex_box.hpp"

#include <algorithm>

namespace rigcert {

ComplexBox::ComplexBox(std::complex<double> z, Precision bits)
    : re_(Interval::point(z.real(), bits)), im_(Interval::point(z.imag(), bits)) {}

ComplexBox ComplexBox::i(Precision bits) { return ComplexBox(Interval(0, bits), Interval(1, bits)); }

double ComplexBox::width() const { return std::max(re_.width(), im_.width()); }

ComplexBox& ComplexBox::operator+=(const ComplexBox& rhs) { return *this = *this + rhs; }
ComplexBox& ComplexBox::operator-=(const ComplexBox& rhs) { return *this = *this - rhs; }
ComplexBox& ComplexBox::operator*=(const ComplexBox& rhs) { return *this = *this * rhs; }

std::string ComplexBox::to_string(int digits) const {
  return re_.to_string(digits) + " + i*" + im_.to_string(digits);
}

ComplexBox operator-(const ComplexBox& z) { return ComplexBox(-z.re(), -z.im()); }

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re() + b.re(), a.im() + b.im());
}

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re() - b.re(), a.im() - b.im());
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

ComplexBox operator*(const Interval& a, const ComplexBox& b) { return ComplexBox(a * b.re(), a * b.im()); }

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  const Interval denom = sqr(b.re()) + sqr(b.im());
  const ComplexBox num = a * conj(b);
  return ComplexBox(num.re() / denom, num.im() / denom);
}

ComplexBox conj(const ComplexBox& z) { return ComplexBox(z.re(), -z.im()); }

Interval modulus(const ComplexBox& z) { return sqrt(sqr(z.re()) + sqr(z.im())); }

ComplexBox complex_exp(const ComplexBox& z) {
  if (!z.is_finite()) throw OverflowError("complex_exp of a non-finite box");
  const Interval scale = exp(z.re());
  if (!scale.is_finite()) throw OverflowError("complex_exp overflowed: |e^z| is unbounded");
  return ComplexBox(scale * cos(z.im()), scale * sin(z.im()));
}

ComplexBox complex_log(const ComplexBox& z) {
  return ComplexBox(log(modulus(z)), atan2(z.im(), z.re()));
}

ComplexBox complex_pow(const ComplexBox& base, const ComplexBox& exponent) {
  return complex_exp(exponent * complex_log(base));
}

}  // namespace rigcert
