#include "rigcert/ybe.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rigcert {

double norm_inf(const FastMatrix& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs(const FastMatrix& m) {
  double best = 0.0;
  for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
  return best;
}

std::complex<double> determinant(FastMatrix m) {
  const std::size_t n = m.dim();
  std::complex<double> det(1.0, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == std::complex<double>()) return {};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::complex<double> factor = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= factor * m(col, j);
    }
  }
  return det;
}

FastMatrix midpoint(const BoxMatrix& m) {
  FastMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).midpoint();
  return out;
}

namespace {

void require_nonzero(std::complex<double> alpha) {
  if (alpha == std::complex<double>()) throw std::invalid_argument("alpha must be non-zero");
}

struct BoxResidual {
  bool contains_zero = true;
  double width = 0.0;
  double magnitude = 0.0;
};

BoxResidual box_residual(const BoxMatrix& m) {
  BoxResidual r;
  for (const ComplexBox& z : m.entries()) {
    r.contains_zero = r.contains_zero && z.contains_zero();
    r.width = std::max(r.width, z.width());
    r.magnitude = std::max({r.magnitude, z.re().magnitude(), z.im().magnitude()});
  }
  return r;
}

template <class Matrix, class Scalar>
Matrix exponent_side(const Matrix& j12, const Matrix& j23, const Scalar& first, const Scalar& middle,
                     const Scalar& last, bool starts_with_12) {
  if (starts_with_12) return scaled(first, j12) + scaled(middle, j23) + scaled(last, j12);
  return scaled(first, j23) + scaled(middle, j12) + scaled(last, j23);
}

}  // namespace

FastMatrix make_j(std::complex<double> alpha) {
  require_nonzero(alpha);
  const std::complex<double> i(0.0, 1.0);
  FastMatrix j(4);
  j(0, 3) = i / alpha;
  j(1, 2) = i;
  j(2, 1) = i;
  j(3, 0) = alpha * i;
  return j;
}

BoxMatrix make_j_rigorous(std::complex<double> alpha, Precision bits) {
  require_nonzero(alpha);
  const ComplexBox i = ComplexBox::i(bits);
  const ComplexBox a(alpha, 53);
  BoxMatrix j(4);
  j(0, 3) = i / a;
  j(1, 2) = i;
  j(2, 1) = i;
  j(3, 0) = a * i;
  return j;
}

JAxioms verify_j_axioms(const FastMatrix& j, std::size_t d, double tolerance) {
  if (j.dim() != d * d) throw std::invalid_argument("J must be d^2 x d^2");
  JAxioms out;
  out.j_squared.residual = max_abs(j * j + FastMatrix::identity(j.dim()));
  out.j_squared.pass = out.j_squared.residual < tolerance;
  const FastMatrix j12 = lift(j, LiftPosition::Twelve, d);
  const FastMatrix j23 = lift(j, LiftPosition::TwentyThree, d);
  out.j12_j23_commute.residual = max_abs(j12 * j23 - j23 * j12);
  out.j12_j23_commute.pass = out.j12_j23_commute.residual < tolerance;
  return out;
}

JAxioms verify_j_axioms(const BoxMatrix& j, std::size_t d, double width_tolerance) {
  if (j.dim() != d * d) throw std::invalid_argument("J must be d^2 x d^2");
  JAxioms out;
  const BoxResidual squared = box_residual(j * j + BoxMatrix::identity(j.dim()));
  out.j_squared.residual = squared.magnitude;
  out.j_squared.pass = squared.contains_zero && squared.width < width_tolerance;
  const BoxMatrix j12 = lift(j, LiftPosition::Twelve, d);
  const BoxMatrix j23 = lift(j, LiftPosition::TwentyThree, d);
  const BoxResidual commute = box_residual(j12 * j23 - j23 * j12);
  out.j12_j23_commute.residual = commute.magnitude;
  out.j12_j23_commute.pass = commute.contains_zero && commute.width < width_tolerance;
  return out;
}

FastMatrix r_of_x(const FastMatrix& j, double x) {
  return scaled(std::cos(x), FastMatrix::identity(j.dim())) + scaled(std::sin(x), j);
}

BoxMatrix r_of_x(const BoxMatrix& j, const Interval& x) {
  return scaled(cos(x), BoxMatrix::identity(j.dim())) + scaled(sin(x), j);
}

SeriesExp exp_of_xj(const FastMatrix& j, double x, int terms) {
  if (terms < 1) throw std::invalid_argument("need at least one series term");
  const FastMatrix m = scaled(x, j);
  FastMatrix term = FastMatrix::identity(j.dim());
  FastMatrix sum = term;
  for (int k = 1; k <= terms; ++k) {
    term = scaled(1.0 / k, term * m);
    sum += term;
  }
  const double norm = norm_inf(m);
  double bound = 0.0;
  if (norm > 0.0) {
    bound = std::exp((terms + 1) * std::log(norm) - std::lgamma(terms + 2.0) + norm);
  }
  return {sum, bound};
}

FastMatrix expm(const FastMatrix& m, int terms) {
  const double norm = norm_inf(m);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const FastMatrix reduced = scaled(std::ldexp(1.0, -squarings), m);
  FastMatrix term = FastMatrix::identity(m.dim());
  FastMatrix result = term;
  for (int k = 1; k <= terms; ++k) {
    term = scaled(1.0 / k, term * reduced);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

std::vector<YbeSample> random_samples(std::size_t count, std::uint64_t seed, double range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-range, range);
  std::vector<YbeSample> out(count);
  for (YbeSample& s : out) {
    s.x = dist(rng);
    s.y = dist(rng);
  }
  return out;
}

YbeReport check_colored_ybe(const FastMatrix& j, const std::vector<YbeSample>& samples, double tolerance) {
  YbeReport report;
  report.alpha = j(3, 0) / std::complex<double>(0.0, 1.0);
  report.mode = YbeMode::Fast;
  report.tolerance = tolerance;
  report.samples = samples;
  report.axioms = verify_j_axioms(j, 2, tolerance);

  const FastMatrix j12 = lift(j, LiftPosition::Twelve);
  const FastMatrix j23 = lift(j, LiftPosition::TwentyThree);
  for (const YbeSample& s : samples) {
    const double x = s.x;
    const double y = s.y;
    const FastMatrix rx = r_of_x(j, x);
    const FastMatrix ry = r_of_x(j, y);
    const FastMatrix rxy = r_of_x(j, x + y);
    const FastMatrix lhs = lift(rx, LiftPosition::Twelve) * lift(rxy, LiftPosition::TwentyThree) *
                           lift(ry, LiftPosition::Twelve);
    const FastMatrix rhs = lift(ry, LiftPosition::TwentyThree) * lift(rxy, LiftPosition::Twelve) *
                           lift(rx, LiftPosition::TwentyThree);
    const double residual = max_abs(lhs - rhs);
    if (!report.worst_sample || residual > report.max_residual) {
      report.max_residual = residual;
      report.worst_sample = s;
    }

    const FastMatrix left_exp = exponent_side(j12, j23, x, x + y, y, true);
    const FastMatrix right_exp = exponent_side(j12, j23, y, x + y, x, false);
    report.exponent_identity_residual = std::max(report.exponent_identity_residual, max_abs(left_exp - right_exp));

    const FastMatrix a = scaled(x, j12);
    const FastMatrix b = scaled(x + y, j23);
    report.product_rule_residual = std::max(report.product_rule_residual, max_abs(expm(a) * expm(b) - expm(a + b)));
  }
  report.pass = report.axioms.pass() && report.max_residual < tolerance &&
                report.exponent_identity_residual < tolerance && report.product_rule_residual < tolerance;
  return report;
}

YbeReport check_colored_ybe(const BoxMatrix& j, const std::vector<YbeSample>& samples, Precision bits,
                            double width_tolerance) {
  YbeReport report;
  report.alpha = j(3, 0).midpoint() / std::complex<double>(0.0, 1.0);
  report.mode = YbeMode::Rigorous;
  report.precision = bits;
  report.tolerance = width_tolerance;
  report.samples = samples;
  report.axioms = verify_j_axioms(j, 2, width_tolerance);

  const BoxMatrix j12 = lift(j, LiftPosition::Twelve);
  const BoxMatrix j23 = lift(j, LiftPosition::TwentyThree);
  const FastMatrix j_mid = midpoint(j);
  bool exponents_contain_zero = true;
  for (const YbeSample& s : samples) {
    const Interval x = Interval::point(s.x, bits);
    const Interval y = Interval::point(s.y, bits);
    const Interval xy = x + y;
    const BoxMatrix rx = r_of_x(j, x);
    const BoxMatrix ry = r_of_x(j, y);
    const BoxMatrix rxy = r_of_x(j, xy);
    const BoxMatrix lhs = lift(rx, LiftPosition::Twelve) * lift(rxy, LiftPosition::TwentyThree) *
                          lift(ry, LiftPosition::Twelve);
    const BoxMatrix rhs = lift(ry, LiftPosition::TwentyThree) * lift(rxy, LiftPosition::Twelve) *
                          lift(rx, LiftPosition::TwentyThree);
    const BoxResidual residual = box_residual(lhs - rhs);
    report.residual_contains_zero = report.residual_contains_zero && residual.contains_zero;
    report.max_residual_width = std::max(report.max_residual_width, residual.width);
    if (!report.worst_sample || residual.magnitude > report.max_residual) {
      report.max_residual = residual.magnitude;
      report.worst_sample = s;
    }

    const BoxResidual exponents = box_residual(exponent_side(j12, j23, x, xy, y, true) -
                                               exponent_side(j12, j23, y, xy, x, false));
    exponents_contain_zero = exponents_contain_zero && exponents.contains_zero;
    report.exponent_identity_residual = std::max(report.exponent_identity_residual, exponents.magnitude);

    // The product rule has no rigorous series here; check it on the midpoint J.
    const FastMatrix a = scaled(s.x, lift(j_mid, LiftPosition::Twelve));
    const FastMatrix b = scaled(s.x + s.y, lift(j_mid, LiftPosition::TwentyThree));
    report.product_rule_residual = std::max(report.product_rule_residual, max_abs(expm(a) * expm(b) - expm(a + b)));
  }
  report.pass = report.axioms.pass() && report.residual_contains_zero && report.max_residual_width < width_tolerance &&
                exponents_contain_zero && report.product_rule_residual < kFastTolerance;
  return report;
}

nlohmann::json matrix_json(const FastMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const YbeReport& r) {
  nlohmann::json samples = nlohmann::json::array();
  for (const YbeSample& s : r.samples) samples.push_back({s.x, s.y});
  nlohmann::json out = {
      {"alpha", {r.alpha.real(), r.alpha.imag()}},
      {"mode", r.mode == YbeMode::Fast ? "fast" : "rigorous"},
      {"precision", r.precision},
      {"tolerance", r.tolerance},
      {"axiom_checks",
       {{"j_squared", {{"pass", r.axioms.j_squared.pass}, {"residual", r.axioms.j_squared.residual}}},
        {"j12_j23_commute",
         {{"pass", r.axioms.j12_j23_commute.pass}, {"residual", r.axioms.j12_j23_commute.residual}}}}},
      {"max_residual", r.max_residual},
      {"exponent_identity_residual", r.exponent_identity_residual},
      {"product_rule_residual", r.product_rule_residual},
      {"sample_points", samples},
      {"verdict", r.pass ? "pass" : "fail"},
  };
  if (r.mode == YbeMode::Rigorous) {
    out["residual_contains_zero"] = r.residual_contains_zero;
    out["max_residual_width"] = r.max_residual_width;
  }
  if (r.worst_sample) {
    out["worst_sample"] = {{"x", r.worst_sample->x}, {"y", r.worst_sample->y}, {"residual", r.max_residual}};
  }
  return out;
}

}  // namespace rigcert
