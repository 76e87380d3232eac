#include "rigcert/big_float.hpp"

#include <cstdio>
#include <utility>

namespace rigcert {

BigFloat::BigFloat(Precision bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  *value_ = *other.value_;
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(value_)) return "0";
  char* buffer = nullptr;
  const char* format = rnd == MPFR_RNDD   ? "%.*RDe"
                       : rnd == MPFR_RNDU ? "%.*RUe"
                       : rnd == MPFR_RNDZ ? "%.*RZe"
                                          : "%.*RNe";
  const int length = mpfr_asprintf(&buffer, format, digits - 1, value_);
  std::string out = length >= 0 ? std::string(buffer, static_cast<std::size_t>(length)) : std::string("nan");
  if (buffer != nullptr) mpfr_free_str(buffer);
  return out;
}

}  // namespace rigcert
