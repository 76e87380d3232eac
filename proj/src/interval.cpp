#include "rigcert/interval.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rigcert/constants.hpp"

namespace rigcert {
namespace {

Precision joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

const BigFloat& min_of(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
const BigFloat& max_of(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

// Applies a monotone non-decreasing unary MPFR function endpoint-wise.
template <class Fn>
Interval monotone(const Interval& x, Fn fn) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  fn(lo.get(), x.lo().get(), MPFR_RNDD);
  fn(hi.get(), x.hi().get(), MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

// Number of the smallest and largest integers inside [t.lo, t.hi].
struct IntegerSpan {
  bool empty = true;
  bool several = false;
  bool odd = false;  // parity of the single integer when !several
};

IntegerSpan integers_in(const Interval& t) {
  IntegerSpan span;
  BigFloat first(t.precision());
  BigFloat last(t.precision());
  mpfr_ceil(first.get(), t.lo().get());
  mpfr_floor(last.get(), t.hi().get());
  if (last < first) return span;
  span.empty = false;
  if (!(first == last)) {
    span.several = true;
    return span;
  }
  mpz_t n;
  mpz_init(n);
  mpfr_get_z(n, first.get(), MPFR_RNDN);
  span.odd = mpz_odd_p(n) != 0;
  mpz_clear(n);
  return span;
}

// Range of cos (or sin) over x. `shifted` is x/pi (cos) or x/pi - 1/2 (sin);
// extrema sit at its integers with value (-1)^n.
Interval periodic_range(const Interval& x, const Interval& shifted, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  const Precision bits = x.precision();
  if (!x.is_finite()) return Interval::from_bounds(-1.0, 1.0, bits);
  std::array<BigFloat, 2> lows{BigFloat(bits), BigFloat(bits)};
  std::array<BigFloat, 2> highs{BigFloat(bits), BigFloat(bits)};
  fn(lows[0].get(), x.lo().get(), MPFR_RNDD);
  fn(lows[1].get(), x.hi().get(), MPFR_RNDD);
  fn(highs[0].get(), x.lo().get(), MPFR_RNDU);
  fn(highs[1].get(), x.hi().get(), MPFR_RNDU);
  BigFloat lo = min_of(lows[0], lows[1]);
  BigFloat hi = max_of(highs[0], highs[1]);

  const IntegerSpan span = integers_in(shifted);
  if (!span.empty) {
    if (span.several || span.odd) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    if (span.several || !span.odd) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  }
  if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

}  // namespace

Interval::Interval() : lo_(MPFR_PREC_MIN), hi_(MPFR_PREC_MIN) {}

Interval::Interval(long value, Precision bits) : lo_(bits), hi_(bits) {
  mpfr_set_si(lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(hi_.get(), value, MPFR_RNDU);
}

Interval Interval::point(double value, Precision bits) {
  Interval out;
  out.lo_ = BigFloat(bits);
  out.hi_ = BigFloat(bits);
  mpfr_set_d(out.lo_.get(), value, MPFR_RNDD);
  mpfr_set_d(out.hi_.get(), value, MPFR_RNDU);
  return out;
}

Interval Interval::from_bounds(const BigFloat& lo, const BigFloat& hi) {
  if (lo.is_nan() || hi.is_nan()) return entire(std::max(lo.precision(), hi.precision()));
  if (hi < lo) throw std::invalid_argument("interval bounds out of order");
  Interval out;
  out.lo_ = lo;
  out.hi_ = hi;
  return out;
}

Interval Interval::from_bounds(double lo, double hi, Precision bits) {
  if (hi < lo) throw std::invalid_argument("interval bounds out of order");
  Interval out;
  out.lo_ = BigFloat(bits);
  out.hi_ = BigFloat(bits);
  mpfr_set_d(out.lo_.get(), lo, MPFR_RNDD);
  mpfr_set_d(out.hi_.get(), hi, MPFR_RNDU);
  return out;
}

Interval Interval::from_decimal(std::string_view text, Precision bits) {
  const std::string buffer(text);
  Interval out;
  out.lo_ = BigFloat(bits);
  out.hi_ = BigFloat(bits);
  char* end = nullptr;
  mpfr_strtofr(out.lo_.get(), buffer.c_str(), &end, 10, MPFR_RNDD);
  if (buffer.empty() || end != buffer.c_str() + buffer.size()) {
    throw std::invalid_argument("not a decimal literal: '" + buffer + "'");
  }
  mpfr_strtofr(out.hi_.get(), buffer.c_str(), &end, 10, MPFR_RNDU);
  return out;
}

Interval Interval::entire(Precision bits) {
  Interval out;
  out.lo_ = BigFloat(bits);
  out.hi_ = BigFloat(bits);
  mpfr_set_inf(out.lo_.get(), -1);
  mpfr_set_inf(out.hi_.get(), 1);
  return out;
}

Precision Interval::precision() const { return std::max(lo_.precision(), hi_.precision()); }

std::optional<int> Interval::sign() const {
  if (is_positive()) return 1;
  if (is_negative()) return -1;
  if (is_exact_zero()) return 0;
  return std::nullopt;
}

bool Interval::contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

bool Interval::contains(double value) const {
  return mpfr_cmp_d(lo_.get(), value) <= 0 && mpfr_cmp_d(hi_.get(), value) >= 0;
}

double Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

double Interval::magnitude() const {
  BigFloat a(precision());
  BigFloat b(precision());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
  return max_of(a, b).to_double(MPFR_RNDU);
}

double Interval::mignitude() const {
  if (contains_zero()) return 0.0;
  BigFloat a(precision());
  BigFloat b(precision());
  mpfr_abs(a.get(), lo_.get(), MPFR_RNDD);
  mpfr_abs(b.get(), hi_.get(), MPFR_RNDD);
  return min_of(a, b).to_double(MPFR_RNDD);
}

BigFloat Interval::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

double Interval::midpoint() const { return mid().to_double(); }

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }
Interval& Interval::operator/=(const Interval& rhs) { return *this = *this / rhs; }

Interval Interval::with_precision(Precision bits) const {
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set(lo.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return from_bounds(lo, hi);
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
}

Interval operator-(const Interval& x) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_neg(lo.get(), x.hi().get(), MPFR_RNDD);
  mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

Interval operator+(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_add(lo.get(), a.lo().get(), b.lo().get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi().get(), b.hi().get(), MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_sub(lo.get(), a.lo().get(), b.hi().get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi().get(), b.lo().get(), MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Interval(0, bits);
  const std::array<mpfr_srcptr, 2> xs{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo().get(), b.hi().get()};
  BigFloat lo(bits);
  BigFloat hi(bits);
  BigFloat t(bits);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (t.is_nan()) return Interval::entire(bits);
      if (first || t < lo) lo = t;
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || hi < t) hi = t;
      first = false;
    }
  }
  return Interval::from_bounds(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing zero: " + b.to_string(8));
  const Precision bits = joint(a, b);
  const std::array<mpfr_srcptr, 2> xs{a.lo().get(), a.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{b.lo().get(), b.hi().get()};
  BigFloat lo(bits);
  BigFloat hi(bits);
  BigFloat t(bits);
  bool first = true;
  for (mpfr_srcptr x : xs) {
    for (mpfr_srcptr y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (t.is_nan()) return Interval::entire(bits);
      if (first || t < lo) lo = t;
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || hi < t) hi = t;
      first = false;
    }
  }
  return Interval::from_bounds(lo, hi);
}

bool identical(const Interval& a, const Interval& b) { return a.lo() == b.lo() && a.hi() == b.hi(); }

Interval hull(const Interval& a, const Interval& b) {
  const Precision bits = joint(a, b);
  BigFloat lo(bits);
  BigFloat hi(bits);
  mpfr_set(lo.get(), min_of(a.lo(), b.lo()).get(), MPFR_RNDD);
  mpfr_set(hi.get(), max_of(a.hi(), b.hi()).get(), MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  const BigFloat& lo = max_of(a.lo(), b.lo());
  const BigFloat& hi = min_of(a.hi(), b.hi());
  if (hi < lo) return std::nullopt;
  return Interval::from_bounds(lo, hi);
}

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  BigFloat hi(x.precision());
  BigFloat neg_lo(x.precision());
  mpfr_neg(neg_lo.get(), x.lo().get(), MPFR_RNDU);
  hi = max_of(neg_lo, x.hi());
  return Interval::from_bounds(BigFloat(x.precision()), hi);
}

Interval sqr(const Interval& x) {
  const Interval m = abs(x);
  return monotone(m, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqr(r, v, rnd); });
}

Interval pow(const Interval& x, long exponent) {
  if (exponent == 0) return Interval(1, x.precision());
  if (exponent < 0) return Interval(1, x.precision()) / pow(x, -exponent);
  const auto n = static_cast<unsigned long>(exponent);
  const Interval base = (exponent % 2 == 0) ? abs(x) : x;
  return monotone(base, [n](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_pow_ui(r, v, n, rnd); });
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw DomainError("sqrt of an interval with negative part: " + x.to_string(8));
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqrt(r, v, rnd); });
}

Interval exp(const Interval& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_exp(r, v, rnd); });
}

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) throw DomainError("ln of a non-positive interval: " + x.to_string(8));
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log(r, v, rnd); });
}

Interval cos(const Interval& x) {
  if (!x.is_finite()) return Interval::from_bounds(-1.0, 1.0, x.precision());
  const Interval turns = x / pi(x.precision());
  return periodic_range(x, turns, mpfr_cos);
}

Interval sin(const Interval& x) {
  if (!x.is_finite()) return Interval::from_bounds(-1.0, 1.0, x.precision());
  const Interval turns = x / pi(x.precision()) - ldexp(Interval(1, x.precision()), -1);
  return periodic_range(x, turns, mpfr_sin);
}

Interval atan2(const Interval& y, const Interval& x) {
  if (!(y.is_positive() || y.is_negative() || x.is_positive())) {
    throw DomainError("atan2 box touches the origin or the negative real axis");
  }
  const Precision bits = joint(x, y);
  const std::array<mpfr_srcptr, 2> xs{x.lo().get(), x.hi().get()};
  const std::array<mpfr_srcptr, 2> ys{y.lo().get(), y.hi().get()};
  BigFloat lo(bits);
  BigFloat hi(bits);
  BigFloat t(bits);
  bool first = true;
  for (mpfr_srcptr yy : ys) {
    for (mpfr_srcptr xx : xs) {
      mpfr_atan2(t.get(), yy, xx, MPFR_RNDD);
      if (first || t < lo) lo = t;
      mpfr_atan2(t.get(), yy, xx, MPFR_RNDU);
      if (first || hi < t) hi = t;
      first = false;
    }
  }
  return Interval::from_bounds(lo, hi);
}

Interval ldexp(const Interval& x, long k) {
  BigFloat lo(x.precision());
  BigFloat hi(x.precision());
  mpfr_mul_2si(lo.get(), x.lo().get(), k, MPFR_RNDD);
  mpfr_mul_2si(hi.get(), x.hi().get(), k, MPFR_RNDU);
  return Interval::from_bounds(lo, hi);
}

std::optional<ElementaryFunction> parse_elementary_function(std::string_view name) {
  if (name == "exp") return ElementaryFunction::Exp;
  if (name == "ln" || name == "log") return ElementaryFunction::Ln;
  if (name == "sin") return ElementaryFunction::Sin;
  if (name == "cos") return ElementaryFunction::Cos;
  if (name == "sqrt") return ElementaryFunction::Sqrt;
  return std::nullopt;
}

Interval elem_fn(ElementaryFunction f, const Interval& x) {
  switch (f) {
    case ElementaryFunction::Exp:
      return exp(x);
    case ElementaryFunction::Ln:
      return log(x);
    case ElementaryFunction::Sin:
      return sin(x);
    case ElementaryFunction::Cos:
      return cos(x);
    case ElementaryFunction::Sqrt:
      return sqrt(x);
  }
  throw std::invalid_argument("unknown elementary function");
}

}  // namespace rigcert
