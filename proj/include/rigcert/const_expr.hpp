#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rigcert/interval.hpp"

namespace rigcert {

/// Syntax error in a constant expression; `position` is a 0-based offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Immutable expression tree over integers, decimals, pi, e and
/// + - * / ^int, sqrt, ln, exp, sin, cos.
///
/// Text syntax: `pi`, `e`, `sqrt(13)`, `12345678`, `3/4`, `0.5`,
/// `2*pi - e^2`, `ln(pi)`. `^` binds tighter than unary minus and takes an
/// integer exponent.
class ConstExpr {
 public:
  enum class Op { Literal, Pi, E, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Ln, Exp, Sin, Cos };

  /// The literal 0.
  ConstExpr();

  static ConstExpr parse(std::string_view text);
  static ConstExpr integer(long value);
  /// Decimal literal kept exactly as written ("12345678", "0.25").
  static ConstExpr literal(std::string digits);
  static ConstExpr pi();
  static ConstExpr e();
  static ConstExpr unary(Op op, ConstExpr arg);
  static ConstExpr binary(Op op, ConstExpr lhs, ConstExpr rhs);
  static ConstExpr power(ConstExpr base, long exponent);

  Op op() const;
  /// Exact integer value when the expression is an integer literal or its negation.
  std::optional<long long> as_integer() const;
  /// Fully parenthesised canonical text; parses back to an equal tree.
  std::string to_string() const;
  /// Enclosure of the exact value; throws DomainError outside the domain.
  Interval evaluate(Precision bits) const;

  friend ConstExpr operator-(const ConstExpr& a) { return unary(Op::Neg, a); }
  friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) { return binary(Op::Add, a, b); }
  friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return binary(Op::Sub, a, b); }
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) { return binary(Op::Mul, a, b); }
  friend ConstExpr operator/(const ConstExpr& a, const ConstExpr& b) { return binary(Op::Div, a, b); }

  struct Node;

 private:
  explicit ConstExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

ConstExpr sqrt(const ConstExpr& x);
ConstExpr ln(const ConstExpr& x);
ConstExpr exp(const ConstExpr& x);
ConstExpr sin(const ConstExpr& x);
ConstExpr cos(const ConstExpr& x);

/// Checked entry point: precision must be at least kMinPrecision.
Interval eval_const(const ConstExpr& expr, Precision bits);

}  // namespace rigcert
