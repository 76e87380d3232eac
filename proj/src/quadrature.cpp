#include "rigcert/quadrature.hpp"

#include <cmath>
#include <vector>

namespace rigcert {
namespace {

// Taylor coefficients of exp(-x^2) about `c` up to `order`, from
// f' = -2 x f:  (k+1) a_{k+1} = -2 (c a_k + a_{k-1}).
std::vector<Interval> taylor_coefficients(const Interval& c, int order) {
  const Precision bits = c.precision();
  std::vector<Interval> a;
  a.reserve(static_cast<std::size_t>(order) + 1);
  a.push_back(exp(-sqr(c)));
  if (order >= 1) a.push_back(Interval(-2, bits) * c * a[0]);
  for (int k = 1; k < order; ++k) {
    const Interval next = Interval(-2, bits) * (c * a[k] + a[k - 1]) / Interval(k + 1, bits);
    a.push_back(next);
  }
  return a;
}

// Integral of exp(-x^2) over the exact panel [lo, hi].
Interval panel_integral(const BigFloat& lo, const BigFloat& hi, Precision bits, int order) {
  BigFloat centre(bits + 2);
  mpfr_add(centre.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(centre.get(), centre.get(), 1, MPFR_RNDN);
  const Interval c = Interval::from_bounds(centre, centre);
  const Interval left = Interval::from_bounds(lo, lo);
  const Interval right = Interval::from_bounds(hi, hi);
  const Interval u = (right - c).with_precision(bits);
  const Interval v = (left - c).with_precision(bits);
  const Interval panel = Interval::from_bounds(lo, hi).with_precision(bits);

  const std::vector<Interval> at_centre = taylor_coefficients(c.with_precision(bits), order - 1);
  const std::vector<Interval> over_panel = taylor_coefficients(panel, order);

  // int_v^u t^k dt = (u^{k+1} - v^{k+1}) / (k+1)
  auto moment = [&](int k) { return (pow(u, k + 1) - pow(v, k + 1)) / Interval(k + 1, bits); };

  Interval sum(0, bits);
  for (int k = 0; k < order; ++k) sum = sum + at_centre[static_cast<std::size_t>(k)] * moment(k);
  // Lagrange remainder: t^order >= 0 for even order, so the mean value theorem
  // for integrals puts it in a_order(panel) * int t^order.
  return sum + over_panel[static_cast<std::size_t>(order)] * moment(order);
}

// Integral of exp(-x^2) for x between an uncertain endpoint and `inner`:
// |inner - x| * f(x) with x ranging over `end`.
Interval endpoint_sliver(const Interval& end, const BigFloat& inner, Precision bits) {
  const Interval gap = abs(Interval::from_bounds(inner, inner) - end);
  return Interval::from_bounds(BigFloat(bits), gap.hi()) * exp(-sqr(end));
}

Interval raw_integral(const Interval& a, const Interval& b, int subdivisions, Precision bits, int order) {
  // Interior panels run over the exact range [a.hi, b.lo].
  const BigFloat& start = a.hi();
  const BigFloat& stop = b.lo();
  BigFloat span(bits);
  mpfr_sub(span.get(), stop.get(), start.get(), MPFR_RNDN);

  std::vector<BigFloat> breaks;
  breaks.reserve(static_cast<std::size_t>(subdivisions) + 1);
  breaks.push_back(start);
  for (int i = 1; i < subdivisions; ++i) {
    BigFloat x(bits + 8);
    mpfr_mul_si(x.get(), span.get(), i, MPFR_RNDN);
    mpfr_div_si(x.get(), x.get(), subdivisions, MPFR_RNDN);
    mpfr_add(x.get(), x.get(), start.get(), MPFR_RNDN);
    breaks.push_back(std::move(x));
  }
  breaks.push_back(stop);

  Interval total(0, bits);
  for (int i = 0; i < subdivisions; ++i) {
    total = total + panel_integral(breaks[static_cast<std::size_t>(i)], breaks[static_cast<std::size_t>(i) + 1],
                                   bits, order);
  }
  if (!a.is_point()) total = total + endpoint_sliver(a, start, bits);
  if (!b.is_point()) total = total + endpoint_sliver(b, stop, bits);
  return total;
}

struct Endpoints {
  Interval a;
  Interval b;
  bool degenerate = false;
};

Endpoints checked_endpoints(const ConstExpr& a, const ConstExpr& b, Precision bits) {
  Endpoints e{a.evaluate(bits), b.evaluate(bits)};
  if (e.a.is_point() && e.b.is_point() && e.a.lo() == e.b.lo()) {
    e.degenerate = true;
    return e;
  }
  if (!(e.a.hi() < e.b.lo())) {
    throw std::invalid_argument("integration needs a < b certifiably, got a = " + e.a.to_string(8) +
                                ", b = " + e.b.to_string(8));
  }
  return e;
}

Interval nested_integral(const Interval& a, const Interval& b, int subdivisions, Precision bits, int order) {
  Interval raw = raw_integral(a, b, subdivisions, bits, order);
  if (subdivisions % 2 != 0) return raw;
  const Interval coarse = nested_integral(a, b, subdivisions / 2, bits, order);
  if (auto both = intersect(raw, coarse)) return *both;
  throw QuadratureError("disjoint enclosures at " + std::to_string(subdivisions) + " panels");
}

}  // namespace

QuadratureResult integrate_gaussian_fixed(const ConstExpr& a, const ConstExpr& b, int subdivisions, Precision bits,
                                          int taylor_order) {
  if (subdivisions < 1) throw std::invalid_argument("need at least one subdivision");
  if (taylor_order < 2 || taylor_order % 2 != 0) throw std::invalid_argument("taylor order must be even and >= 2");
  const Endpoints e = checked_endpoints(a, b, bits);
  if (e.degenerate) return {Interval(0, bits), 0, a, b, std::nullopt};
  return {nested_integral(e.a, e.b, subdivisions, bits, taylor_order), subdivisions, a, b, std::nullopt};
}

QuadratureResult integrate_gaussian(const ConstExpr& a, const ConstExpr& b, Precision bits,
                                    const QuadratureOptions& options) {
  const Endpoints e = checked_endpoints(a, b, bits);
  if (e.degenerate) return {Interval(0, bits), 0, a, b, std::nullopt};
  const double target =
      options.width_target > 0 ? options.width_target : std::ldexp(1.0, -static_cast<int>(3 * bits / 4));

  Interval current = raw_integral(e.a, e.b, 1, bits, options.taylor_order);
  for (int n = 2; n <= options.max_subdivisions; n *= 2) {
    const Interval raw = raw_integral(e.a, e.b, n, bits, options.taylor_order);
    auto both = intersect(raw, current);
    if (!both) throw QuadratureError("disjoint enclosures at " + std::to_string(n) + " panels");
    current = *both;
    if (current.width() <= target) return {current, n, a, b, std::nullopt};
  }
  throw QuadratureError("width target " + std::to_string(target) + " not reached within " +
                        std::to_string(options.max_subdivisions) + " panels (width " +
                        std::to_string(current.width()) + ")");
}

Interval gaussian_tail_bound(const Interval& t) {
  if (!t.is_positive()) throw DomainError("tail bound needs T > 0");
  return exp(-sqr(t)) / (Interval(2, t.precision()) * t);
}

QuadratureResult integrate_gaussian_real_line(const ConstExpr& t, Precision bits, const QuadratureOptions& options) {
  QuadratureResult core = integrate_gaussian(-t, t, bits, options);
  const Interval tail = gaussian_tail_bound(t.evaluate(bits));
  const Interval both_tails = Interval::from_bounds(BigFloat(bits), (Interval(2, bits) * tail).hi());
  core.value = core.value + both_tails;
  core.tail_bound = both_tails;
  return core;
}

}  // namespace rigcert
