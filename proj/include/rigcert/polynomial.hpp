#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rigcert/const_expr.hpp"

namespace rigcert {

/// Raised when the leading coefficient cannot be shown to be non-zero.
class IllDefinedDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficients of an interval polynomial in descending degree order.
using IntervalCoeffs = std::vector<Interval>;

/// Univariate polynomial with constant-expression coefficients, highest
/// degree first: {1, -pi, e} is x^2 - pi x + e.
class IntervalPolynomial {
 public:
  explicit IntervalPolynomial(std::vector<ConstExpr> coeffs);

  /// Parses "1,-pi,e" or "[1, -pi, e]". ParseError positions refer to `text`.
  static IntervalPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ConstExpr>& coeffs() const { return coeffs_; }

  IntervalCoeffs evaluate_coeffs(Precision bits) const;
  /// Throws IllDefinedDegree unless the leading coefficient excludes 0 at `bits`.
  IntervalCoeffs checked_coeffs(Precision bits) const;
  /// Horner enclosure of p(x).
  Interval evaluate(const Interval& x, Precision bits) const;

  std::string to_string() const;

 private:
  std::vector<ConstExpr> coeffs_;
};

/// Horner evaluation of a descending coefficient list.
Interval horner(const IntervalCoeffs& coeffs, const Interval& x);
IntervalCoeffs derivative(const IntervalCoeffs& coeffs);

/// x^2 - pi x + e and its quartic / sextic extensions with sqrt(2), sqrt(3), sqrt(5), sqrt(13).
IntervalPolynomial pi_e_quadratic();
IntervalPolynomial pi_e_quartic();
IntervalPolynomial pi_e_sextic();

}  // namespace rigcert
