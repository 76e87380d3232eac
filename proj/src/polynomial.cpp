#include "rigcert/polynomial.hpp"

#include <cctype>

namespace rigcert {

IntervalPolynomial::IntervalPolynomial(std::vector<ConstExpr> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw IllDefinedDegree("polynomial needs at least one coefficient");
}

IntervalPolynomial IntervalPolynomial::parse(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin < end && text[begin] == '[') {
    if (text[end - 1] != ']') throw ParseError("missing ']'", end);
    ++begin;
    --end;
  }

  std::vector<ConstExpr> coeffs;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    const char c = i < end ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != ',' || depth != 0) continue;
    const std::string_view item = text.substr(start, i - start);
    if (item.find_first_not_of(" \t\n") == std::string_view::npos) throw ParseError("empty coefficient", start);
    try {
      coeffs.push_back(ConstExpr::parse(item));
    } catch (const ParseError& err) {
      throw ParseError("bad coefficient " + std::to_string(coeffs.size() + 1), start + err.position());
    }
    start = i + 1;
  }
  return IntervalPolynomial(std::move(coeffs));
}

IntervalCoeffs IntervalPolynomial::evaluate_coeffs(Precision bits) const {
  IntervalCoeffs out;
  out.reserve(coeffs_.size());
  for (const ConstExpr& c : coeffs_) out.push_back(c.evaluate(bits));
  return out;
}

IntervalCoeffs IntervalPolynomial::checked_coeffs(Precision bits) const {
  IntervalCoeffs out = evaluate_coeffs(bits);
  if (out.front().contains_zero()) {
    throw IllDefinedDegree("leading coefficient " + coeffs_.front().to_string() + " encloses zero at " +
                           std::to_string(bits) + " bits: " + out.front().to_string(8));
  }
  return out;
}

Interval IntervalPolynomial::evaluate(const Interval& x, Precision bits) const {
  return horner(evaluate_coeffs(bits), x);
}

std::string IntervalPolynomial::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + "]";
}

Interval horner(const IntervalCoeffs& coeffs, const Interval& x) {
  Interval acc = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * x + coeffs[i];
  return acc;
}

IntervalCoeffs derivative(const IntervalCoeffs& coeffs) {
  const auto degree = static_cast<long>(coeffs.size()) - 1;
  if (degree == 0) return {Interval()};
  IntervalCoeffs out;
  out.reserve(coeffs.size() - 1);
  for (long i = 0; i < degree; ++i) out.push_back(Interval(degree - i, coeffs[i].precision()) * coeffs[i]);
  return out;
}

IntervalPolynomial pi_e_quadratic() { return IntervalPolynomial::parse("1, -pi, e"); }

IntervalPolynomial pi_e_quartic() { return IntervalPolynomial::parse("1, -pi, e, -sqrt(2), sqrt(3)"); }

IntervalPolynomial pi_e_sextic() {
  return IntervalPolynomial::parse("1, -pi, e, -sqrt(2), sqrt(3), -sqrt(5), sqrt(13)");
}

}  // namespace rigcert
