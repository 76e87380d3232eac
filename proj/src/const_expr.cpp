#include "rigcert/const_expr.hpp"

#include <cctype>
#include <charconv>
#include <climits>
#include <vector>

#include "rigcert/constants.hpp"

namespace rigcert {

struct ConstExpr::Node {
  Op op = Op::Literal;
  std::string literal;  // Literal only
  long exponent = 0;    // Pow only
  std::vector<ConstExpr> args;
};

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

bool is_integer_literal(std::string_view digits) {
  return !digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ConstExpr parse() {
    ConstExpr expr = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ConstExpr parse_sum() {
    ConstExpr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_product();
      } else if (accept('-')) {
        lhs = lhs - parse_product();
      } else {
        return lhs;
      }
    }
  }

  ConstExpr parse_product() {
    ConstExpr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_unary();
      } else if (accept('/')) {
        lhs = lhs / parse_unary();
      } else {
        return lhs;
      }
    }
  }

  ConstExpr parse_unary() {
    if (accept('-')) return -parse_unary();
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  ConstExpr parse_power() {
    ConstExpr base = parse_primary();
    if (!accept('^')) return base;
    const bool parenthesised = accept('(');
    const bool negative = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long exponent = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
    if (ec != std::errc() || exponent > 4096) {
      pos_ = start;
      fail("exponent out of range");
    }
    if (parenthesised) expect(')');
    return ConstExpr::power(base, negative ? -exponent : exponent);
  }

  ConstExpr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ConstExpr inner = parse_sum();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ConstExpr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (frac == pos_ && frac == start + 1) {
        pos_ = start;
        fail("malformed number");
      }
    }
    return ConstExpr::literal(std::string(text_.substr(start, pos_ - start)));
  }

  ConstExpr parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "pi") return ConstExpr::pi();
    if (name == "e") return ConstExpr::e();
    ConstExpr::Op op;
    if (name == "sqrt") {
      op = ConstExpr::Op::Sqrt;
    } else if (name == "ln" || name == "log") {
      op = ConstExpr::Op::Ln;
    } else if (name == "exp") {
      op = ConstExpr::Op::Exp;
    } else if (name == "sin") {
      op = ConstExpr::Op::Sin;
    } else if (name == "cos") {
      op = ConstExpr::Op::Cos;
    } else {
      pos_ = start;
      fail("unknown name '" + std::string(name) + "'");
    }
    expect('(');
    ConstExpr arg = parse_sum();
    expect(')');
    return ConstExpr::unary(op, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* function_name(ConstExpr::Op op) {
  switch (op) {
    case ConstExpr::Op::Sqrt:
      return "sqrt";
    case ConstExpr::Op::Ln:
      return "ln";
    case ConstExpr::Op::Exp:
      return "exp";
    case ConstExpr::Op::Sin:
      return "sin";
    case ConstExpr::Op::Cos:
      return "cos";
    default:
      return "?";
  }
}

}  // namespace

ConstExpr::ConstExpr() : ConstExpr(literal("0")) {}

ConstExpr ConstExpr::parse(std::string_view text) { return Parser(text).parse(); }

ConstExpr ConstExpr::integer(long value) {
  if (value < 0) return -literal(std::to_string(-static_cast<long long>(value)));
  return literal(std::to_string(value));
}

ConstExpr ConstExpr::literal(std::string digits) {
  auto node = std::make_shared<Node>();
  node->op = Op::Literal;
  node->literal = std::move(digits);
  return ConstExpr(std::move(node));
}

ConstExpr ConstExpr::pi() {
  static const ConstExpr value(std::make_shared<const Node>(Node{Op::Pi, {}, 0, {}}));
  return value;
}

ConstExpr ConstExpr::e() {
  static const ConstExpr value(std::make_shared<const Node>(Node{Op::E, {}, 0, {}}));
  return value;
}

ConstExpr ConstExpr::unary(Op op, ConstExpr arg) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->args.push_back(std::move(arg));
  return ConstExpr(std::move(node));
}

ConstExpr ConstExpr::binary(Op op, ConstExpr lhs, ConstExpr rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->args.push_back(std::move(lhs));
  node->args.push_back(std::move(rhs));
  return ConstExpr(std::move(node));
}

ConstExpr ConstExpr::power(ConstExpr base, long exponent) {
  auto node = std::make_shared<Node>();
  node->op = Op::Pow;
  node->exponent = exponent;
  node->args.push_back(std::move(base));
  return ConstExpr(std::move(node));
}

ConstExpr::Op ConstExpr::op() const { return node_->op; }

std::optional<long long> ConstExpr::as_integer() const {
  if (node_->op == Op::Neg) {
    const auto inner = node_->args[0].as_integer();
    if (!inner) return std::nullopt;
    return -*inner;
  }
  if (node_->op != Op::Literal || !is_integer_literal(node_->literal)) return std::nullopt;
  long long value = 0;
  const std::string& s = node_->literal;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string ConstExpr::to_string() const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Literal:
      return n.literal;
    case Op::Pi:
      return "pi";
    case Op::E:
      return "e";
    case Op::Neg:
      return "(-" + n.args[0].to_string() + ")";
    case Op::Add:
      return "(" + n.args[0].to_string() + " + " + n.args[1].to_string() + ")";
    case Op::Sub:
      return "(" + n.args[0].to_string() + " - " + n.args[1].to_string() + ")";
    case Op::Mul:
      return "(" + n.args[0].to_string() + " * " + n.args[1].to_string() + ")";
    case Op::Div:
      return "(" + n.args[0].to_string() + " / " + n.args[1].to_string() + ")";
    case Op::Pow:
      return "(" + n.args[0].to_string() + "^(" + std::to_string(n.exponent) + "))";
    default:
      return std::string(function_name(n.op)) + "(" + n.args[0].to_string() + ")";
  }
}

Interval ConstExpr::evaluate(Precision bits) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Literal:
      return Interval::from_decimal(n.literal, bits);
    case Op::Pi:
      return rigcert::pi(bits);
    case Op::E:
      return euler(bits);
    case Op::Neg:
      return -n.args[0].evaluate(bits);
    case Op::Add:
      return n.args[0].evaluate(bits) + n.args[1].evaluate(bits);
    case Op::Sub:
      return n.args[0].evaluate(bits) - n.args[1].evaluate(bits);
    case Op::Mul:
      return n.args[0].evaluate(bits) * n.args[1].evaluate(bits);
    case Op::Div:
      return n.args[0].evaluate(bits) / n.args[1].evaluate(bits);
    case Op::Pow:
      return rigcert::pow(n.args[0].evaluate(bits), n.exponent);
    case Op::Sqrt: {
      const Interval arg = n.args[0].evaluate(bits);
      if (arg.is_negative()) throw DomainError("sqrt of a negative value: " + n.args[0].to_string());
      return rigcert::sqrt(arg);
    }
    case Op::Ln:
      return rigcert::log(n.args[0].evaluate(bits));
    case Op::Exp:
      return rigcert::exp(n.args[0].evaluate(bits));
    case Op::Sin:
      return rigcert::sin(n.args[0].evaluate(bits));
    case Op::Cos:
      return rigcert::cos(n.args[0].evaluate(bits));
  }
  throw std::logic_error("unhandled ConstExpr node");
}

ConstExpr sqrt(const ConstExpr& x) { return ConstExpr::unary(ConstExpr::Op::Sqrt, x); }
ConstExpr ln(const ConstExpr& x) { return ConstExpr::unary(ConstExpr::Op::Ln, x); }
ConstExpr exp(const ConstExpr& x) { return ConstExpr::unary(ConstExpr::Op::Exp, x); }
ConstExpr sin(const ConstExpr& x) { return ConstExpr::unary(ConstExpr::Op::Sin, x); }
ConstExpr cos(const ConstExpr& x) { return ConstExpr::unary(ConstExpr::Op::Cos, x); }

Interval eval_const(const ConstExpr& expr, Precision bits) {
  if (bits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  return expr.evaluate(bits);
}

}  // namespace rigcert
