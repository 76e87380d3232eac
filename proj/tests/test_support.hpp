#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigcert/const_expr.hpp"

namespace rigcert::testkit {

/// Random constant expression of depth <= max_depth over the full grammar.
/// Some trees leave a function's domain; callers skip those.
inline ConstExpr random_const_expr(std::mt19937_64& rng, int max_depth) {
  std::uniform_int_distribution<int> pick(0, 99);
  std::uniform_int_distribution<long> small(1, 12);
  if (max_depth <= 1 || pick(rng) < 25) {
    switch (pick(rng) % 6) {
      case 0:
        return ConstExpr::pi();
      case 1:
        return ConstExpr::e();
      case 2:
        return sqrt(ConstExpr::integer(small(rng)));
      case 3:
        return ConstExpr::integer(small(rng)) / ConstExpr::integer(small(rng));
      case 4:
        return ConstExpr::literal(std::to_string(small(rng)) + "." + std::to_string(small(rng) * 37));
      default:
        return ConstExpr::integer(small(rng) - 6);
    }
  }
  const ConstExpr a = random_const_expr(rng, max_depth - 1);
  switch (pick(rng) % 11) {
    case 0:
      return a + random_const_expr(rng, max_depth - 1);
    case 1:
      return a - random_const_expr(rng, max_depth - 1);
    case 2:
      return a * random_const_expr(rng, max_depth - 1);
    case 3:
      return a / random_const_expr(rng, max_depth - 1);
    case 4:
      return ConstExpr::power(a, std::uniform_int_distribution<long>(-3, 4)(rng));
    case 5:
      return sqrt(a);
    case 6:
      return ln(a);
    case 7:
      return exp(sin(a));
    case 8:
      return sin(a);
    case 9:
      return cos(a);
    default:
      return -a;
  }
}

/// Distinct real roots of an integer polynomial (leading coefficient first)
/// from companion-matrix eigenvalues; nullopt when roots are too close
/// together, or too close to the real axis, to classify in floating point.
inline std::optional<int> companion_real_root_count(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) return 0;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) companion(0, j) = -coeffs[j + 1] / coeffs[0];
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  const Eigen::VectorXcd roots = companion.eigenvalues();
  for (int i = 0; i < n; ++i) {
    const double im = std::abs(roots[i].imag());
    if (im > 1e-6 && im < 1e-3) return std::nullopt;
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(roots[i] - roots[j]) < 1e-3) return std::nullopt;
    }
  }
  return static_cast<int>(
      std::count_if(roots.begin(), roots.end(), [](const std::complex<double>& z) { return std::abs(z.imag()) <= 1e-6; }));
}

inline std::optional<int> companion_real_root_count(const std::vector<long>& coeffs) {
  return companion_real_root_count(std::vector<double>(coeffs.begin(), coeffs.end()));
}

/// Coefficient list in the textual form accepted by IntervalPolynomial::parse.
inline std::string join_coeffs(const std::vector<long>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out;
}

/// Random integer polynomial of degree 1..6 with coefficients in [-9, 9].
inline std::vector<long> random_integer_poly(std::mt19937_64& rng) {
  const int degree = std::uniform_int_distribution<int>(1, 6)(rng);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<long> c(degree + 1);
  for (long& x : c) x = coeff(rng);
  while (c[0] == 0) c[0] = coeff(rng);
  return c;
}

}  // namespace rigcert::testkit
