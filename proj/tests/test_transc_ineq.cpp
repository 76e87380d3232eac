#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rigcert/constants.hpp"
#include "rigcert/quadrature.hpp"
#include "rigcert/transcendental.hpp"

using namespace rigcert;

namespace {

const Certificate& find(const std::vector<Certificate>& certs, const std::string& id) {
  for (const Certificate& c : certs)
    if (c.claim_id == id) return c;
  throw std::out_of_range(id);
}

void expect_margin(const Certificate& c, double reference, double tol) {
  EXPECT_EQ(c.verdict, Verdict::Certified) << c.claim_id;
  EXPECT_TRUE(c.margin.is_positive()) << c.claim_id;
  EXPECT_NEAR(c.margin.midpoint(), reference, tol) << c.claim_id;
}

}  // namespace

TEST(Certificate, VerdictFromMargin) {
  EXPECT_EQ(verdict_from_margin(Interval::from_bounds(0.1, 0.2)), Verdict::Certified);
  EXPECT_EQ(verdict_from_margin(Interval::from_bounds(-0.2, -0.1)), Verdict::Refuted);
  EXPECT_EQ(verdict_from_margin(Interval::from_bounds(-0.1, 0.1)), Verdict::Inconclusive);
  EXPECT_EQ(verdict_from_margin(Interval(0)), Verdict::Inconclusive);
}

TEST(EulerIdentities, ContainZeroWithTightWidth) {
  for (Precision bits : {24, 53, 128, 256}) {
    const std::vector<Certificate> certs = certify_euler_identities(bits);
    ASSERT_EQ(certs.size(), 3u);
    for (const Certificate& c : certs) {
      EXPECT_EQ(c.verdict, Verdict::Certified) << c.claim_id << " at " << bits;
      EXPECT_TRUE(c.margin.contains_zero());
      EXPECT_LT(c.witness["residual_width"].get<double>(), std::ldexp(1.0, static_cast<int>(8 - bits)));
    }
  }
  for (const Certificate& c : certify_euler_identities(128)) EXPECT_LT(c.witness["residual_width"].get<double>(), 1e-30);
}

TEST(EulerIdentities, IPowIMatchesOracle) {
  const std::vector<Certificate> certs = certify_euler_identities(128);
  const Certificate& c = find(certs, "sec2.euler.i_pow_i");
  const double lo = std::stod(c.witness["e_minus_half_pi"]["lo"].get<std::string>());
  EXPECT_NEAR(lo, 0.20787957635076190855, 1e-16);
}

TEST(TrigLog, Margins) {
  const auto certs = certify_trig_log_inequalities(128);
  expect_margin(find(certs, "sec2.trig.cos_e_sin_6pi5"), 0.32394866249449196873, 1e-15);
  const Certificate& log = find(certs, "sec2.log.log_pi_e");
  expect_margin(log, 0.32278724733976263444, 1e-15);
  EXPECT_TRUE(log.witness["am_gm_consistent"].get<bool>());
  EXPECT_NEAR(std::stod(log.witness["am_gm_margin"]["lo"].get<std::string>()), 0.31169977562092611047, 1e-15);
}

TEST(Modulus, Margins) {
  const auto certs = certify_modulus_inequalities(128);
  expect_margin(find(certs, "sec2.mod.forall_z"), 0.15584988781046305523, 1e-15);
  expect_margin(find(certs, "sec2.mod.z_minus_i"), 0.57668917486925199690, 1e-15);
  const Certificate& tight = find(certs, "sec2.mod.ei_minus_pi");
  expect_margin(tight, 0.01572345526361287626, 1e-15);
  EXPECT_LT(tight.margin.width(), 1e-6);
}

TEST(Modulus, DirectEnclosureContainsReduction) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng);
    const Interval direct = modulus_sum(ComplexBox({x, u(rng)}, 128));
    const Interval xr = Interval::point(x, 256);
    const Interval reduced = exp(Interval(1, 256) - xr) + exp(xr);
    EXPECT_TRUE(direct.contains(reduced.with_precision(128))) << x;
  }
}

TEST(Modulus, GridOracleMinimumIsTwoSqrtE) {
  double best = 1e300;
  for (double re = -10; re <= 10; re += 0.01)
    for (double im = -10; im <= 10; im += 0.5) {
      const std::complex<double> z(re, im);
      best = std::min(best, std::abs(std::exp(1.0 - z) + std::exp(std::conj(z))));
    }
  EXPECT_NEAR(best, 2 * std::sqrt(std::exp(1.0)), 1e-4);
}

TEST(PiBound, MarginAndEquivalence) {
  for (Precision bits : {24, 128}) {
    const Certificate c = certify_pi_bound(bits);
    expect_margin(c, 0.15584988781046305523, 1e-6);
    EXPECT_TRUE(c.witness["signs_agree"].get<bool>());
    EXPECT_NEAR(std::stod(c.witness["four_e_minus_pi_squared"]["lo"].get<std::string>()), 1.00352291274682232261,
                1e-5);
  }
}

TEST(GaussianBound, OneToTwo) {
  const Certificate c = certify_gaussian_bound(ConstExpr::integer(1), ConstExpr::integer(2), 128);
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_NEAR(c.margin.midpoint(), 0.06418786497446881654, 1e-15);
  EXPECT_NEAR(std::stod(c.witness["integral"]["lo"].get<std::string>()), 0.13525725794999465457, 1e-15);
  EXPECT_NEAR(std::stod(c.witness["bound"]["lo"].get<std::string>()), 0.19944512292446347111, 1e-15);
  EXPECT_EQ(c.witness["pi_half_interior"], true);
}

TEST(GaussianBound, ZeroToOne) {
  const Certificate c = certify_gaussian_bound(ConstExpr::integer(0), ConstExpr::integer(1), 128);
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_NEAR(std::stod(c.witness["bound"]["lo"].get<std::string>()), 4.61529828670188754107, 1e-14);
  EXPECT_EQ(c.witness["pi_half_interior"], false);
}

TEST(GaussianBound, DegenerateIsInconclusive) {
  const Certificate c = certify_gaussian_bound(ConstExpr::integer(1), ConstExpr::integer(1), 64, 128);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
}

TEST(GaussianBound, PointwiseExponentialBound) {
  // e^{-x^2} < e^{e - pi x} because x^2 - pi x + e > 0.
  const Interval p = pi(128);
  const Interval e = euler(128);
  for (int k = 0; k < 1000; ++k) {
    const Interval x = Interval::point(-20.0 + 40.0 * k / 999.0, 128);
    EXPECT_TRUE((exp(e - p * x) - exp(-sqr(x))).is_positive()) << x.midpoint();
  }
}

TEST(GaussianBound, RandomIntervalsChain) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> u(-30, 30);
  for (int k = 0; k < 50; ++k) {
    long a = u(rng);
    long b = u(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const ConstExpr lo = ConstExpr::integer(a) / ConstExpr::integer(10);
    const ConstExpr hi = ConstExpr::integer(b) / ConstExpr::integer(10);
    const Interval bound = gaussian_upper_bound(lo.evaluate(128), hi.evaluate(128));
    const QuadratureResult integral = integrate_gaussian(lo, hi, 128);
    EXPECT_GT(bound.lo(), integral.value.hi()) << a << " " << b;
  }
}

TEST(Reciprocal, SexticOnHalfLine) {
  const Certificate c = certify_reciprocal_inequality(128);
  EXPECT_EQ(c.verdict, Verdict::Certified);
  EXPECT_EQ(c.witness["roots"]["count"], 0);
  EXPECT_NEAR(std::stod(c.witness["value_at_sample"]["lo"].get<std::string>()), 2.26400971802923383833, 1e-15);
}

TEST(Quadrature, KnownValues) {
  const QuadratureResult r = integrate_gaussian(ConstExpr::integer(1), ConstExpr::integer(2), 128);
  EXPECT_NEAR(r.value.midpoint(), 0.13525725794999465457, 1e-18);
  EXPECT_LT(r.value.width(), 1e-25);

  const QuadratureResult unit = integrate_gaussian(ConstExpr::integer(0), ConstExpr::integer(1), 128);
  EXPECT_NEAR(unit.value.midpoint(), 0.74682413281242702540, 1e-18);
}

TEST(Quadrature, EmptyRange) {
  const QuadratureResult r = integrate_gaussian(ConstExpr::integer(0), ConstExpr::integer(0), 64);
  EXPECT_TRUE(r.value.is_exact_zero());
  EXPECT_EQ(r.subdivisions, 0);
  EXPECT_THROW(integrate_gaussian(ConstExpr::integer(2), ConstExpr::integer(1), 64), std::invalid_argument);
}

TEST(Quadrature, RealLineEnclosesSqrtPi) {
  const QuadratureResult r = integrate_gaussian_real_line(ConstExpr::integer(6), 128);
  const Interval root_pi = sqrt(pi(128));
  EXPECT_TRUE(r.value.contains(root_pi));
  EXPECT_LT(r.value.width(), 1e-10);
  ASSERT_TRUE(r.tail_bound.has_value());
  EXPECT_NEAR(r.tail_bound->midpoint(), std::exp(-36.0) / 12.0, 1e-20);
  EXPECT_LT(gaussian_tail_bound(Interval(6, 64)).hi().to_double(), std::exp(-36.0) / 6.0);
}

TEST(QuadratureProperty, NestingUnderDoubling) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{{"1", "2"}, {"-6", "6"}, {"0", "pi/2"}, {"-1/3", "sqrt(2)"}}) {
    const ConstExpr lo = ConstExpr::parse(a);
    const ConstExpr hi = ConstExpr::parse(b);
    Interval previous = integrate_gaussian_fixed(lo, hi, 1, 128, 8).value;
    for (int n = 2; n <= 256; n *= 2) {
      const Interval next = integrate_gaussian_fixed(lo, hi, n, 128, 8).value;
      ASSERT_TRUE(previous.contains(next)) << a << ".." << b << " n=" << n;
      ASSERT_LE(next.width(), previous.width());
      previous = next;
    }
  }
}

TEST(QuadratureProperty, ContainmentAgainstFinerRule) {
  const ConstExpr lo = ConstExpr::integer(-2);
  const ConstExpr hi = ConstExpr::parse("3/2");
  const Interval coarse = integrate_gaussian_fixed(lo, hi, 3, 96, 12).value;
  const Interval fine = integrate_gaussian_fixed(lo, hi, 512, 256, 24).value;
  EXPECT_TRUE(coarse.contains(fine.with_precision(96)));
}
