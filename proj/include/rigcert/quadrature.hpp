#pragma once

#include <optional>
#include <stdexcept>

#include "rigcert/const_expr.hpp"

namespace rigcert {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rigorous enclosure of the integral of exp(-x^2) over [a, b].
struct QuadratureResult {
  Interval value;
  int subdivisions = 0;
  ConstExpr a;
  ConstExpr b;
  /// Set when the result stands for an integral over the whole real line.
  std::optional<Interval> tail_bound;
};

struct QuadratureOptions {
  /// Absolute width target; <= 0 picks 2^(-3*bits/4).
  double width_target = 0.0;
  int max_subdivisions = 1 << 16;
  /// Even Taylor order per panel.
  int taylor_order = 24;
};

/// Enclosure over `subdivisions` equal panels. For even counts the result is
/// intersected with the half-count result, so doubling never widens it.
QuadratureResult integrate_gaussian_fixed(const ConstExpr& a, const ConstExpr& b, int subdivisions, Precision bits,
                                          int taylor_order = 24);

/// Doubles the panel count until the enclosure is narrower than the target.
/// Throws QuadratureError when the target is out of reach.
QuadratureResult integrate_gaussian(const ConstExpr& a, const ConstExpr& b, Precision bits,
                                    const QuadratureOptions& options = {});

/// exp(-T^2) / (2T), an upper bound on the integral over [T, inf) for T > 0.
Interval gaussian_tail_bound(const Interval& t);

/// Integral over [-T, T] plus both analytic tails: an enclosure of sqrt(pi).
QuadratureResult integrate_gaussian_real_line(const ConstExpr& t, Precision bits, const QuadratureOptions& options = {});

}  // namespace rigcert
