#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rigcert/big_float.hpp"

namespace rigcert {

/// Raised when an operation leaves its mathematical domain (ln of a
/// non-positive enclosure, division by an enclosure of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed interval [lo, hi] with outward-rounded endpoints.
///
/// Every operation returns an enclosure of the exact result over all points
/// of its operands. Results are computed at the larger of the operand
/// precisions; endpoints may be infinite after overflow.
class Interval {
 public:
  /// The exact point 0.
  Interval();
  /// Enclosure of `value`; exact whenever bits >= 64.
  explicit Interval(long value, Precision bits = kDefaultPrecision);

  static Interval point(double value, Precision bits = kDefaultPrecision);
  static Interval from_bounds(const BigFloat& lo, const BigFloat& hi);
  static Interval from_bounds(double lo, double hi, Precision bits = kDefaultPrecision);
  /// Enclosure of a decimal or integer literal (e.g. "12345678", "-0.25", "1e-3").
  static Interval from_decimal(std::string_view text, Precision bits);
  static Interval entire(Precision bits = kDefaultPrecision);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  Precision precision() const;

  bool is_finite() const { return lo_.is_finite() && hi_.is_finite(); }
  bool is_point() const { return lo_ == hi_; }
  bool is_exact_zero() const { return lo_.is_zero() && hi_.is_zero(); }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }
  /// +1 / -1 when the sign is decided, 0 for the exact point 0, nullopt otherwise.
  std::optional<int> sign() const;

  bool contains(const Interval& other) const;
  bool contains(double value) const;
  /// Upper bound on hi - lo.
  double width() const;
  /// Upper bound on max(|lo|, |hi|).
  double magnitude() const;
  /// Lower bound on min |x| over the interval.
  double mignitude() const;
  double midpoint() const;
  BigFloat mid() const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  /// Same interval, endpoints rounded outward to `bits`.
  Interval with_precision(Precision bits) const;

  /// "[lo, hi]" with directed decimal rounding.
  std::string to_string(int digits = 17) const;

 private:
  BigFloat lo_;
  BigFloat hi_;
};

Interval operator-(const Interval& x);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);

/// Endpoint-wise equality (not mathematical equality of the enclosed values).
bool identical(const Interval& a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);
/// Intersection; nullopt when disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval pow(const Interval& x, long exponent);
Interval sqrt(const Interval& x);
Interval exp(const Interval& x);
Interval log(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval atan2(const Interval& y, const Interval& x);
/// Multiply by 2^k exactly.
Interval ldexp(const Interval& x, long k);

/// Elementary function selector for elem_fn.
enum class ElementaryFunction { Exp, Ln, Sin, Cos, Sqrt };

std::optional<ElementaryFunction> parse_elementary_function(std::string_view name);
Interval elem_fn(ElementaryFunction f, const Interval& x);

}  // namespace rigcert
