#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rigcert/complex_box.hpp"
#include "rigcert/const_expr.hpp"
#include "rigcert/constants.hpp"
#include "rigcert/interval.hpp"
#include "test_support.hpp"

using namespace rigcert;

namespace {

Interval dec(const char* text, Precision bits = 256) { return Interval::from_decimal(text, bits); }

// Reference values to 20 significant digits, computed independently.
constexpr const char* kPi = "3.14159265358979323846";
constexpr const char* kCosE = "-0.91173391478696509789";
constexpr const char* kSin6Pi5 = "-0.58778525229247312917";
constexpr const char* kCos1 = "0.54030230586813971740";
constexpr const char* kSin1 = "0.84147098480789650665";

bool near(const Interval& x, const char* reference, double tol) {
  return std::abs(x.midpoint() - std::stod(reference)) < tol;
}

}  // namespace

TEST(Interval, DefaultIsExactZero) {
  Interval z;
  EXPECT_TRUE(z.is_exact_zero());
  EXPECT_TRUE(z.is_point());
  EXPECT_EQ(z.sign(), 0);
}

TEST(Interval, LoNeverExceedsHi) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int k = 0; k < 200; ++k) {
    const Interval a = Interval::from_bounds(std::min(u(rng), 0.0), std::max(u(rng), 0.5), 64);
    const Interval b = Interval::from_bounds(1.0, 1.0 + std::abs(u(rng)), 64);
    for (const Interval& r : {a + b, a - b, a * b, a / b, sqr(a), exp(a / Interval(10, 64)), sin(a), cos(a), abs(a)}) {
      EXPECT_LE(r.lo(), r.hi());
    }
  }
}

TEST(Interval, FromDecimalEnclosesText) {
  const Interval tenth = dec("0.1", 64);
  EXPECT_FALSE(tenth.is_point());
  EXPECT_TRUE(tenth.contains(dec("0.1", 256).with_precision(64)));
  EXPECT_FALSE(tenth.contains(0.1)) << "the double nearest 0.1 is not 0.1";
  EXPECT_TRUE(dec("0.5", 64).is_point());
}

TEST(Interval, DivisionByZeroContainingIntervalThrows) {
  EXPECT_THROW(Interval(1) / Interval::from_bounds(-1.0, 1.0), DomainError);
}

TEST(Interval, DomainErrors) {
  EXPECT_THROW(log(Interval(0)), DomainError);
  EXPECT_THROW(log(Interval::from_bounds(-1.0, 2.0)), DomainError);
  EXPECT_THROW(sqrt(Interval(-1)), DomainError);
}

TEST(Interval, SinCosClampAcrossExtrema) {
  const Interval wide = Interval::from_bounds(0.0, 7.0, 64);
  const Interval s = sin(wide);
  const Interval c = cos(wide);
  EXPECT_EQ(s.lo().to_double(), -1.0);
  EXPECT_EQ(s.hi().to_double(), 1.0);
  EXPECT_EQ(c.lo().to_double(), -1.0);
  EXPECT_EQ(c.hi().to_double(), 1.0);

  // pi/2 lies inside [1, 2]: the maximum of sin is attained.
  const Interval hump = sin(Interval::from_bounds(1.0, 2.0, 64));
  EXPECT_EQ(hump.hi().to_double(), 1.0);
  EXPECT_TRUE(hump.contains(sin(Interval(2, 64))));
  EXPECT_TRUE(hump.contains(sin(Interval(1, 64))));
}

TEST(Interval, AtanTwoQuadrants) {
  const Interval p = pi(128);
  const Interval fine = pi(256);
  EXPECT_TRUE(atan2(Interval(1), Interval(0)).contains(ldexp(fine, -1).with_precision(128)));
  EXPECT_TRUE(atan2(Interval(1), Interval(-1)).contains((Interval(3, 256) * ldexp(fine, -2)).with_precision(128)));
  EXPECT_TRUE(atan2(Interval(-1), Interval(1)).contains(-ldexp(fine, -2).with_precision(128)));
  EXPECT_NEAR(atan2(Interval(-1), Interval(-1)).midpoint(), -0.75 * p.midpoint(), 1e-15);
}

TEST(Interval, ExpOfZeroIsOne) { EXPECT_TRUE(exp(Interval(0, 64)).contains(1.0)); }

TEST(Interval, IntegerPowers) {
  EXPECT_TRUE(pow(Interval(-2), 3).contains(-8.0));
  EXPECT_TRUE(pow(Interval(2), -2).contains(0.25));
  const Interval sq = pow(Interval::from_bounds(-1.0, 2.0), 2);
  EXPECT_EQ(sq.lo().to_double(), 0.0);
  EXPECT_EQ(sq.hi().to_double(), 4.0);
}

TEST(Constants, PiAt64Bits) {
  const Interval p = pi(64);
  EXPECT_LT(p.width(), 1e-15);
  EXPECT_TRUE(near(p, kPi, 1e-15));
  EXPECT_LT((pi(128) - dec(kPi, 128)).magnitude(), 1e-20);
}

TEST(Constants, PiAndEAreMemoizedAndConsistent) {
  const Interval a = pi(200);
  const Interval b = pi(200);
  EXPECT_TRUE(identical(a, b));
  EXPECT_TRUE(pi(64).contains(pi(256).with_precision(64)));
  EXPECT_TRUE(euler(64).contains(euler(256).with_precision(64)));
}

TEST(Constants, AtomicWidthBound) {
  for (Precision bits : {24, 53, 64, 128, 256, 1024}) {
    for (const Interval& c : {pi(bits), euler(bits), eval_const(ConstExpr::parse("sqrt(13)"), bits)}) {
      EXPECT_LE(c.width(), std::ldexp(1.0, static_cast<int>(3 - bits)) * c.magnitude()) << bits;
    }
  }
}

TEST(ElementaryFunctions, OracleValues) {
  const Interval cos_e = cos(euler(64));
  EXPECT_LT(cos_e.width(), 1e-12);
  EXPECT_TRUE(near(cos_e, kCosE, 1e-15));

  const Interval six_pi_5 = Interval(6, 128) * pi(128) / Interval(5, 128);
  EXPECT_TRUE(near(sin(six_pi_5), kSin6Pi5, 1e-15));
  EXPECT_LT((sin(six_pi_5) - dec(kSin6Pi5, 128)).magnitude(), 1e-20);
  EXPECT_LT((cos(euler(128)) - dec(kCosE, 128)).magnitude(), 1e-20);
}

TEST(ElementaryFunctions, ParseAndDispatch) {
  EXPECT_EQ(parse_elementary_function("ln"), ElementaryFunction::Ln);
  EXPECT_EQ(parse_elementary_function("sqrt"), ElementaryFunction::Sqrt);
  EXPECT_FALSE(parse_elementary_function("tan").has_value());
  EXPECT_TRUE(elem_fn(ElementaryFunction::Sqrt, Interval(4)).contains(2.0));
  EXPECT_THROW(elem_fn(ElementaryFunction::Ln, Interval(-1)), DomainError);
}

TEST(ComplexBox, EulerIdentityAt64Bits) {
  const ComplexBox z = complex_exp(ComplexBox(Interval(0, 64), pi(64)));
  EXPECT_TRUE(z.contains({-1.0, 0.0}));
  EXPECT_LT(z.width(), 1e-12);
}

TEST(ComplexBox, ExpOfZeroAndOfI) {
  EXPECT_TRUE(complex_exp(ComplexBox(Interval(0), Interval(0))).contains({1.0, 0.0}));
  const ComplexBox ei = complex_exp(ComplexBox::i(128));
  EXPECT_TRUE(near(ei.re(), kCos1, 1e-16));
  EXPECT_TRUE(near(ei.im(), kSin1, 1e-16));
}

TEST(ComplexBox, ExpOverflowIsReported) {
  EXPECT_THROW(complex_exp(ComplexBox(Interval::from_decimal("1e30", 64))), OverflowError);
}

TEST(ComplexBox, ModulusOfExpContainsExpOfRealPart) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int k = 0; k < 200; ++k) {
    const double re = u(rng);
    const ComplexBox z({re, u(rng)}, 128);
    EXPECT_TRUE(modulus(complex_exp(z)).contains(exp(Interval::point(re, 128))));
  }
}

TEST(ComplexBox, PrincipalPowerIPowI) {
  const ComplexBox i = ComplexBox::i(128);
  const ComplexBox r = complex_pow(i, i);
  EXPECT_TRUE(r.im().contains(0.0));
  EXPECT_TRUE(near(r.re(), "0.20787957635076190855", 1e-16));
}

TEST(ConstExpr, ParsesGrammar) {
  EXPECT_TRUE(near(eval_const(ConstExpr::parse("pi"), 128), kPi, 1e-16));
  EXPECT_TRUE(eval_const(ConstExpr::parse("sqrt(4)"), 64).is_point());
  EXPECT_TRUE(eval_const(ConstExpr::parse("sqrt(4)"), 64).contains(2.0));
  EXPECT_TRUE(eval_const(ConstExpr::parse("e - e"), 64).contains_zero());
  EXPECT_TRUE(eval_const(ConstExpr::parse("3/4"), 64).contains(0.75));
  EXPECT_TRUE(eval_const(ConstExpr::parse("2^-2"), 64).contains(0.25));
  EXPECT_TRUE(eval_const(ConstExpr::parse("2^(-2)"), 64).contains(0.25));
  EXPECT_TRUE(eval_const(ConstExpr::parse("-(1.5 + 2) * 2"), 64).contains(-7.0));
  EXPECT_TRUE(eval_const(ConstExpr::parse("ln(exp(2))"), 64).contains(2.0));
  EXPECT_TRUE(eval_const(ConstExpr::parse("log(e)"), 64).contains(1.0));
  EXPECT_TRUE(near(eval_const(ConstExpr::parse("cos(e)"), 64), kCosE, 1e-15));
}

TEST(ConstExpr, IntegerRecognition) {
  EXPECT_EQ(ConstExpr::parse("12345678").as_integer(), 12345678);
  EXPECT_EQ(ConstExpr::parse("-7").as_integer(), -7);
  EXPECT_FALSE(ConstExpr::parse("pi").as_integer().has_value());
  EXPECT_FALSE(ConstExpr::parse("1.5").as_integer().has_value());
}

TEST(ConstExpr, ParseErrorsCarryPosition) {
  try {
    ConstExpr::parse("1 + * 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.position(), 4u);
  }
  EXPECT_THROW(ConstExpr::parse("sqrt(2"), ParseError);
  EXPECT_THROW(ConstExpr::parse("tau"), ParseError);
  EXPECT_THROW(ConstExpr::parse(""), ParseError);
  EXPECT_THROW(ConstExpr::parse("2^pi"), ParseError);
}

TEST(ConstExpr, DomainErrorsPropagate) {
  EXPECT_THROW(eval_const(ConstExpr::parse("ln(0)"), 64), DomainError);
  EXPECT_THROW(eval_const(ConstExpr::parse("sqrt(-2)"), 64), DomainError);
  EXPECT_THROW(eval_const(ConstExpr::parse("1/(pi-pi)"), 64), DomainError);
}

TEST(ConstExpr, PrecisionFloor) { EXPECT_THROW(eval_const(ConstExpr::pi(), 23), std::invalid_argument); }

TEST(ConstExpr, RoundTripThroughText) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const ConstExpr expr = testkit::random_const_expr(rng, 4);
    const ConstExpr again = ConstExpr::parse(expr.to_string());
    EXPECT_EQ(again.to_string(), expr.to_string());
  }
}

TEST(ConstExprProperty, ContainmentAndMonotoneRefinement) {
  std::mt19937_64 rng(2024);
  int accepted = 0;
  int attempts = 0;
  while (accepted < 1000 && attempts < 20000) {
    ++attempts;
    const ConstExpr expr = testkit::random_const_expr(rng, 6);
    Interval coarse;
    Interval middle;
    Interval fine;
    try {
      coarse = eval_const(expr, 64);
      middle = eval_const(expr, 128);
      fine = eval_const(expr, 256);
    } catch (const DomainError&) {
      continue;
    }
    if (!coarse.is_finite() || !fine.is_finite()) continue;
    ++accepted;
    ASSERT_TRUE(coarse.contains(fine.with_precision(64))) << expr.to_string();
    ASSERT_LE(middle.width(), coarse.width()) << expr.to_string();
    ASSERT_LE(fine.width(), middle.width()) << expr.to_string();
  }
  EXPECT_EQ(accepted, 1000);
}
