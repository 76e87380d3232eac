#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rigcert/matrix.hpp"

namespace rigcert {

inline constexpr double kFastTolerance = 1e-10;
inline constexpr double kRigorousWidthTolerance = 1e-20;

enum class YbeMode { Fast, Rigorous };

/// Which pair of tensor factors of V (x) V (x) V an operator acts on.
enum class LiftPosition { Twelve, TwentyThree };

/// The 4x4 operator with entries (1,4) = i/alpha, (2,3) = (3,2) = i,
/// (4,1) = alpha i in the basis e1e1, e1e2, e2e1, e2e2.
FastMatrix make_j(std::complex<double> alpha);
/// Same matrix with i/alpha enclosed rigorously at `bits`.
BoxMatrix make_j_rigorous(std::complex<double> alpha, Precision bits);

/// M (x) I_d for LiftPosition::Twelve, I_d (x) M for TwentyThree.
template <class Scalar>
SquareMatrix<Scalar> lift(const SquareMatrix<Scalar>& m, LiftPosition position, std::size_t d = 2) {
  if (m.dim() != d * d) throw std::invalid_argument("lift needs a d^2 x d^2 operator");
  const auto id = SquareMatrix<Scalar>::identity(d);
  return position == LiftPosition::Twelve ? kron(m, id) : kron(id, m);
}

struct AxiomCheck {
  bool pass = false;
  /// Largest residual entry modulus (fast) or upper bound on it (rigorous).
  double residual = 0.0;
};

struct JAxioms {
  AxiomCheck j_squared;        // J J + I = 0
  AxiomCheck j12_j23_commute;  // [J12, J23] = 0

  bool pass() const { return j_squared.pass && j12_j23_commute.pass; }
};

JAxioms verify_j_axioms(const FastMatrix& j, std::size_t d = 2, double tolerance = kFastTolerance);
/// Rigorous form: every residual box must contain 0 and be narrower than `width_tolerance`.
JAxioms verify_j_axioms(const BoxMatrix& j, std::size_t d = 2, double width_tolerance = kRigorousWidthTolerance);

/// cos(x) I + sin(x) J.
FastMatrix r_of_x(const FastMatrix& j, double x);
BoxMatrix r_of_x(const BoxMatrix& j, const Interval& x);

struct SeriesExp {
  FastMatrix value;
  /// ||xJ||^{terms+1} / (terms+1)! * e^{||xJ||} in the infinity norm.
  double remainder_bound = 0.0;
};

/// sum_{k=0}^{terms} (xJ)^k / k!.
SeriesExp exp_of_xj(const FastMatrix& j, double x, int terms);

/// e^M by scaling and squaring around a truncated series.
FastMatrix expm(const FastMatrix& m, int terms = 24);

struct YbeSample {
  double x = 0.0;
  double y = 0.0;
};

/// `count` points uniform in [-range, range]^2 from a seeded generator.
std::vector<YbeSample> random_samples(std::size_t count, std::uint64_t seed, double range = 10.0);

struct YbeReport {
  std::complex<double> alpha;
  YbeMode mode = YbeMode::Fast;
  Precision precision = 53;
  double tolerance = kFastTolerance;
  std::vector<YbeSample> samples;
  JAxioms axioms;
  /// Fast: max entry modulus of LHS - RHS. Rigorous: upper bound on it.
  double max_residual = 0.0;
  /// Rigorous only: every residual box contains 0.
  bool residual_contains_zero = true;
  /// Rigorous only: widest residual box.
  double max_residual_width = 0.0;
  /// x J12 + (x+y) J23 + y J12 against y J23 + (x+y) J12 + x J23.
  double exponent_identity_residual = 0.0;
  /// e^{A} e^{B} against e^{A+B} for A = x J12, B = (x+y) J23.
  double product_rule_residual = 0.0;
  std::optional<YbeSample> worst_sample;
  bool pass = false;
};

/// Evaluates R12(x) R23(x+y) R12(y) - R23(y) R12(x+y) R23(x) at every sample.
YbeReport check_colored_ybe(const FastMatrix& j, const std::vector<YbeSample>& samples,
                            double tolerance = kFastTolerance);
YbeReport check_colored_ybe(const BoxMatrix& j, const std::vector<YbeSample>& samples, Precision bits,
                            double width_tolerance = kRigorousWidthTolerance);

/// Array of rows, each an array of [re, im] pairs.
nlohmann::json matrix_json(const FastMatrix& m);
nlohmann::json to_json(const YbeReport& report);

}  // namespace rigcert
