#pragma once

#include <mpfr.h>

#include <string>

namespace rigcert {

/// Working precision in bits.
using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 24;
inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kDefaultPrecisionCap = 2048;

/// Owning wrapper around an mpfr_t. Copies keep the source precision.
class BigFloat {
 public:
  explicit BigFloat(Precision bits = kDefaultPrecision);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Precision precision() const { return mpfr_get_prec(value_); }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  /// Scientific decimal string with `digits` significant digits, rounded in `rnd`.
  std::string to_string(int digits, mpfr_rnd_t rnd) const;

 private:
  mpfr_t value_;
};

inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

}  // namespace rigcert
