#include "rigcert/transcendental.hpp"

#include <cmath>

#include "rigcert/constants.hpp"
#include "rigcert/positivity.hpp"
#include "rigcert/sturm.hpp"

namespace rigcert {
namespace {

nlohmann::json box_json(const ComplexBox& z) { return {{"re", interval_json(z.re())}, {"im", interval_json(z.im())}}; }

Certificate identity_certificate(std::string id, std::string statement, const ComplexBox& residual,
                                 Precision requested, Precision work) {
  Certificate cert;
  cert.claim_id = std::move(id);
  cert.statement = std::move(statement);
  cert.kind = ClaimKind::IdentityEnclosure;
  cert.margin = modulus(residual);
  cert.precision_used = work;
  const double bound = std::ldexp(1.0, static_cast<int>(8 - requested));
  const double width = residual.width();
  if (residual.contains_zero() && width < bound) {
    cert.verdict = Verdict::Certified;
  } else if (!residual.contains_zero()) {
    cert.verdict = Verdict::Refuted;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  cert.witness = {{"residual", box_json(residual)},
                  {"residual_width", width},
                  {"width_bound", bound},
                  {"requested_precision", requested}};
  return cert;
}

Certificate inequality(std::string id, std::string statement, Interval margin, Precision bits) {
  Certificate cert;
  cert.claim_id = std::move(id);
  cert.statement = std::move(statement);
  cert.verdict = verdict_from_margin(margin);
  cert.margin = std::move(margin);
  cert.precision_used = bits;
  return cert;
}

Interval two_sqrt_e_minus_pi(Precision bits) { return Interval(2, bits) * sqrt(euler(bits)) - pi(bits); }

}  // namespace

std::vector<Certificate> certify_euler_identities(Precision bits) {
  const Precision work = bits + kIdentityGuardBits;
  const Interval p = pi(work);
  const ComplexBox i = ComplexBox::i(work);
  const ComplexBox one(Interval(1, work));
  const ComplexBox i_pi(Interval(0, work), p);

  std::vector<Certificate> out;

  const ComplexBox e_i_pi = complex_exp(i_pi);
  out.push_back(identity_certificate("sec2.euler.e_i_pi", "e^{i pi} + 1 = 0", e_i_pi + one, bits, work));

  // (e^{i pi})^{-i} taken through the exponent: e^{(i pi)(-i)} = e^pi.
  const ComplexBox minus_one_pow = complex_exp(i_pi * (-i));
  const ComplexBox e_pi(exp(p));
  Certificate second = identity_certificate("sec2.euler.minus_one_pow_minus_i", "e^pi = (e^{i pi})^{-i} = (-1)^{-i}",
                                            e_pi - minus_one_pow, bits, work);
  second.witness["e_pi"] = interval_json(e_pi.re());
  out.push_back(std::move(second));

  // i^i through the principal logarithm, against e^{-pi/2}.
  const ComplexBox i_pow_i = complex_pow(i, i);
  const ComplexBox e_minus_half_pi(exp(-ldexp(p, -1)));
  Certificate third =
      identity_certificate("sec2.euler.i_pow_i", "i^i = e^{-pi/2}", i_pow_i - e_minus_half_pi, bits, work);
  third.witness["i_pow_i"] = box_json(i_pow_i);
  third.witness["e_minus_half_pi"] = interval_json(e_minus_half_pi.re());
  out.push_back(std::move(third));
  return out;
}

std::vector<Certificate> certify_trig_log_inequalities(Precision bits, Precision cap) {
  std::vector<Certificate> out;
  out.push_back(escalate(
      [](Precision b) {
        const Interval six_pi_fifths = Interval(6, b) * pi(b) / Interval(5, b);
        const Interval lhs = cos(euler(b));
        const Interval rhs = sin(six_pi_fifths);
        Certificate cert = inequality("sec2.trig.cos_e_sin_6pi5", "cos(e) < sin(6 pi / 5)", rhs - lhs, b);
        cert.witness = {{"cos_e", interval_json(lhs)}, {"sin_6pi_5", interval_json(rhs)}};
        return cert;
      },
      bits, cap));

  out.push_back(escalate(
      [](Precision b) {
        const Interval ln_pi = log(pi(b));
        // log_pi(e) = 1 / ln(pi)
        const Interval lhs = Interval(4, b) / ln_pi + euler(b) * ln_pi;
        const Interval two_pi = Interval(2, b) * pi(b);
        Certificate cert = inequality("sec2.log.log_pi_e", "4 log_pi(e) + e ln(pi) > 2 pi", lhs - two_pi, b);
        // AM-GM: 4/L + e L >= 2 sqrt(4 e) = 4 sqrt(e), so 4 sqrt(e) > 2 pi suffices.
        const Interval am_gm = Interval(4, b) * sqrt(euler(b));
        cert.witness = {{"lhs", interval_json(lhs)},
                        {"am_gm_floor", interval_json(am_gm)},
                        {"am_gm_margin", interval_json(am_gm - two_pi)},
                        {"am_gm_consistent", !(lhs.hi() < am_gm.lo())}};
        return cert;
      },
      bits, cap));
  return out;
}

Interval modulus_sum(const ComplexBox& z) {
  const Precision bits = z.precision();
  const ComplexBox one(Interval(1, bits));
  return modulus(complex_exp(one - z) + complex_exp(conj(z)));
}

std::vector<Certificate> certify_modulus_inequalities(Precision bits, Precision cap) {
  std::vector<Certificate> out;
  out.push_back(escalate(
      [](Precision b) {
        // With z = x + iy both terms carry the phase e^{-iy}, so the modulus is
        // e^{1-x} + e^x, minimised at x = 1/2 with value 2 sqrt(e).
        const Interval half = ldexp(Interval(1, b), -1);
        const Interval at_half = exp(Interval(1, b) - half) + exp(half);
        Certificate cert =
            inequality("sec2.mod.forall_z", "|e^{1-z} + e^{conj z}| > pi for all complex z", two_sqrt_e_minus_pi(b), b);
        cert.witness = {{"reduction", "|e^{1-z} + e^{conj z}| = e^{1-x} + e^{x}, x = re z"},
                        {"minimiser_re_z", "1/2"},
                        {"minimum", interval_json(at_half)},
                        {"direct_at_minimiser", interval_json(modulus_sum(ComplexBox(half, Interval(0, b))))}};
        return cert;
      },
      bits, cap));

  out.push_back(escalate(
      [](Precision b) {
        const ComplexBox i = ComplexBox::i(b);
        const ComplexBox one(Interval(1, b));
        const Interval direct = modulus(complex_exp(i) + complex_exp(one + i));
        const Interval closed_form = Interval(1, b) + euler(b);
        Certificate cert = inequality("sec2.mod.z_minus_i", "|e^i + e^{1+i}| > pi", closed_form - pi(b), b);
        cert.witness = {{"closed_form", "|(1 + e) e^i| = 1 + e"},
                        {"direct_modulus", interval_json(direct)},
                        {"direct_margin", interval_json(direct - pi(b))}};
        return cert;
      },
      bits, cap));

  out.push_back(escalate(
      [](Precision b) {
        const ComplexBox pi_box(pi(b));
        const Interval distance = modulus(complex_exp(ComplexBox::i(b)) - pi_box);
        Certificate cert = inequality("sec2.mod.ei_minus_pi", "|e^i - pi| > e", distance - euler(b), b);
        cert.witness = {{"modulus", interval_json(distance)}};
        return cert;
      },
      bits, cap));
  return out;
}

Certificate certify_pi_bound(Precision bits, Precision cap) {
  return escalate(
      [](Precision b) {
        Certificate cert = inequality("sec4.pi_bound", "pi < 2 sqrt(e)", two_sqrt_e_minus_pi(b), b);
        // pi < 2 sqrt(e)  <=>  pi^2 < 4e  <=>  discriminant of x^2 - pi x + e is negative.
        const Interval discriminant = quadratic_discriminant(pi_e_quadratic(), b);
        const Interval four_e_minus_pi_sq = -discriminant;
        const bool consistent = four_e_minus_pi_sq.is_positive() == cert.margin.is_positive();
        cert.witness = {{"four_e_minus_pi_squared", interval_json(four_e_minus_pi_sq)},
                        {"equivalent_form", "pi^2 < 4e"},
                        {"signs_agree", consistent}};
        if (!consistent && cert.verdict == Verdict::Certified) cert.verdict = Verdict::Inconclusive;
        return cert;
      },
      bits, cap);
}

Interval gaussian_upper_bound(const Interval& a, const Interval& b) {
  const Precision bits = std::max(a.precision(), b.precision());
  const Interval p = pi(bits);
  const Interval e = euler(bits);
  return (exp(e - p * a) - exp(e - p * b)) / p;
}

Certificate certify_gaussian_bound(const ConstExpr& a, const ConstExpr& b, Precision bits, Precision cap) {
  const std::string statement =
      "int_a^b e^{-x^2} dx < (1/pi)(e^{e - pi a} - e^{e - pi b}) on [" + a.to_string() + ", " + b.to_string() + "]";
  return escalate(
      [&](Precision w) {
        const Interval lo = a.evaluate(w);
        const Interval hi = b.evaluate(w);
        const QuadratureResult integral = integrate_gaussian(a, b, w);
        const Interval bound = gaussian_upper_bound(lo, hi);
        Certificate cert = inequality("sec4.gauss.bound", statement, bound - integral.value, w);
        if (integral.subdivisions == 0) cert.verdict = Verdict::Inconclusive;  // a == b: 0 < 0 is false

        const Interval half_pi = ldexp(pi(w), -1);
        nlohmann::json interior;
        if (lo.hi() < half_pi.lo() && half_pi.hi() < hi.lo()) {
          interior = true;
        } else if (half_pi.hi() <= lo.lo() || hi.hi() <= half_pi.lo()) {
          interior = false;
        }
        cert.witness = {{"integral", interval_json(integral.value)},
                        {"bound", interval_json(bound)},
                        {"gap", interval_json(cert.margin)},
                        {"subdivisions", integral.subdivisions},
                        {"pi_half_interior", interior}};
        return cert;
      },
      bits, cap);
}

Certificate certify_reciprocal_inequality(Precision bits, Precision cap) {
  Certificate cert = certify_positive(pi_e_sextic(), Region::positive_half_line(), bits, "sec4.reciprocal", cap);
  cert.statement = "x + e/x - sqrt2/x^2 + sqrt3/x^3 - sqrt5/x^4 + sqrt13/x^5 > pi for x > 0 "
                   "(times x^5: x^6 - pi x^5 + e x^4 - sqrt2 x^3 + sqrt3 x^2 - sqrt5 x + sqrt13 > 0)";
  return cert;
}

}  // namespace rigcert
