#include "rigcert/positivity.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace rigcert {
namespace {

struct Box {
  Interval x;
  Interval lower;  // enclosure of p over x; only lower.lo() is used for ordering
};

struct ByLowerBound {
  bool operator()(const Box& a, const Box& b) const { return b.lower.lo() < a.lower.lo(); }
};

Interval range_over(const IntervalCoeffs& p, const IntervalCoeffs& dp, const Interval& x) {
  const Interval plain = horner(p, x);
  const Interval m = Interval::from_bounds(x.mid(), x.mid()).with_precision(x.precision());
  const Interval centred = horner(p, m) + horner(dp, x) * (x - m);
  if (auto both = intersect(plain, centred)) return *both;
  return plain;
}

// Cauchy bound on the real roots of `poly`.
BigFloat cauchy_radius(const IntervalCoeffs& poly) {
  const Precision bits = poly.front().precision();
  const Interval lead = abs(poly.front());
  Interval worst(0, bits);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const Interval ratio = abs(poly[i]) / lead;
    if (worst.hi() < ratio.hi()) worst = Interval::from_bounds(ratio.hi(), ratio.hi());
  }
  const Interval radius = Interval(1, bits) + worst;
  return radius.hi();
}

Interval search_box(const IntervalCoeffs& coeffs, const Region& region, Precision bits) {
  if (region.kind == Region::Kind::Open) {
    return hull(region.a->evaluate(bits), region.b->evaluate(bits));
  }
  BigFloat radius(bits);
  mpfr_set_ui(radius.get(), 1, MPFR_RNDU);
  if (coeffs.size() > 2) radius = cauchy_radius(derivative(coeffs));
  BigFloat lo(bits);
  if (region.kind == Region::Kind::AllReals) mpfr_neg(lo.get(), radius.get(), MPFR_RNDD);
  return Interval::from_bounds(lo, radius);
}

Interval sample_point(const Region& region, Precision bits) {
  switch (region.kind) {
    case Region::Kind::AllReals:
      return Interval(0, bits);
    case Region::Kind::PositiveHalfLine:
      return Interval(1, bits);
    case Region::Kind::Open:
      return ldexp(region.a->evaluate(bits) + region.b->evaluate(bits), -1);
  }
  return Interval(0, bits);
}

}  // namespace

MinimumEnclosure enclose_minimum(const IntervalCoeffs& coeffs, const Interval& box, std::size_t max_boxes,
                                 double rel_tol) {
  const IntervalCoeffs dp = derivative(coeffs);
  const Precision bits = box.precision();

  MinimumEnclosure result;
  BigFloat best_upper(bits);
  mpfr_set_inf(best_upper.get(), 1);
  auto probe = [&](const Interval& x) {
    const Interval m = Interval::from_bounds(x.mid(), x.mid()).with_precision(bits);
    const Interval value = horner(coeffs, m);
    if (value.hi() < best_upper) {
      best_upper = value.hi();
      result.argmin = m.midpoint();
    }
  };

  std::priority_queue<Box, std::vector<Box>, ByLowerBound> queue;
  queue.push({box, range_over(coeffs, dp, box)});
  probe(box);
  for (const Interval& end : {Interval::from_bounds(box.lo(), box.lo()), Interval::from_bounds(box.hi(), box.hi())}) {
    const Interval value = horner(coeffs, end);
    if (value.hi() < best_upper) {
      best_upper = value.hi();
      result.argmin = end.midpoint();
    }
  }

  while (result.boxes < max_boxes) {
    const Box& top = queue.top();
    const BigFloat& lower = top.lower.lo();
    // Converged: lower bound within rel_tol of the best upper bound.
    BigFloat gap(bits);
    mpfr_sub(gap.get(), best_upper.get(), lower.get(), MPFR_RNDU);
    BigFloat scale(bits);
    mpfr_abs(scale.get(), best_upper.get(), MPFR_RNDN);
    mpfr_mul_d(scale.get(), scale.get(), rel_tol, MPFR_RNDN);
    if (gap <= scale) break;

    const Interval x = top.x;
    queue.pop();
    const BigFloat m = x.mid();
    const Interval left = Interval::from_bounds(x.lo(), m);
    const Interval right = Interval::from_bounds(m, x.hi());
    for (const Interval& half : {left, right}) {
      queue.push({half, range_over(coeffs, dp, half)});
      probe(half);
    }
    ++result.boxes;
  }

  BigFloat lower = queue.top().lower.lo();
  if (best_upper < lower) lower = best_upper;
  result.value = Interval::from_bounds(lower, best_upper);
  return result;
}

Certificate certify_positive(const IntervalPolynomial& p, const Region& region, Precision bits,
                             const std::string& claim_id, Precision cap) {
  const IntervalCoeffs coeffs = p.checked_coeffs(bits);
  if (!coeffs.front().is_positive()) {
    throw PreconditionError("leading coefficient of " + p.to_string() + " is not positive");
  }
  if (region.kind == Region::Kind::AllReals && p.degree() % 2 != 0) {
    throw PreconditionError("positivity on all reals needs even degree, got " + std::to_string(p.degree()));
  }

  Certificate cert;
  cert.claim_id = claim_id;
  cert.statement = "p(x) > 0 on " + region.to_string() + " for p = " + p.to_string();

  const RootCountCertificate roots = sturm_count(p, region, bits, cap);
  Precision work = roots.precision_used;
  cert.witness["roots"] = to_json(roots);

  Interval sample = sample_point(region, work);
  Interval at_sample = p.evaluate(sample, work);
  while (!at_sample.sign() && work * 2 <= cap) {
    work *= 2;
    sample = sample_point(region, work);
    at_sample = p.evaluate(sample, work);
  }
  cert.witness["sample_point"] = interval_json(sample);
  cert.witness["value_at_sample"] = interval_json(at_sample);

  const IntervalCoeffs at_work = p.evaluate_coeffs(work);
  const Interval box = search_box(at_work, region, work);
  const MinimumEnclosure minimum = enclose_minimum(at_work, box, 4000);
  cert.witness["search_box"] = interval_json(box);
  cert.witness["argmin"] = minimum.argmin;
  cert.witness["bisections"] = minimum.boxes;

  cert.margin = minimum.value;
  cert.precision_used = work;
  const bool no_roots = roots.certified() && roots.count == 0;
  if (no_roots && at_sample.is_positive() && cert.margin.is_positive()) {
    cert.verdict = Verdict::Certified;
  } else if (cert.margin.is_negative()) {
    cert.verdict = Verdict::Refuted;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

}  // namespace rigcert
