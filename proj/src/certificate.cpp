#include "rigcert/certificate.hpp"

#include <cmath>

namespace rigcert {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Certified:
      return "CERTIFIED";
    case Verdict::Refuted:
      return "REFUTED";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Verdict verdict_from_margin(const Interval& margin) {
  if (margin.is_positive()) return Verdict::Certified;
  if (margin.is_negative()) return Verdict::Refuted;
  return Verdict::Inconclusive;
}

int decimal_digits(Precision bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 2; }

nlohmann::json interval_json(const Interval& x) {
  const int digits = decimal_digits(x.precision());
  return {{"lo", x.lo().to_string(digits, MPFR_RNDD)}, {"hi", x.hi().to_string(digits, MPFR_RNDU)}};
}

nlohmann::json to_json(const Certificate& c) {
  return {
      {"claim_id", c.claim_id},
      {"statement", c.statement},
      {"kind", c.kind == ClaimKind::Inequality ? "inequality" : "identity_enclosure"},
      {"verdict", to_string(c.verdict)},
      {"margin", interval_json(c.margin)},
      {"precision_used", c.precision_used},
      {"witness", c.witness},
  };
}

Certificate escalate(const std::function<Certificate(Precision)>& attempt, Precision bits, Precision cap) {
  Certificate result = attempt(bits);
  while (result.verdict == Verdict::Inconclusive && bits * 2 <= cap) {
    bits *= 2;
    result = attempt(bits);
  }
  return result;
}

}  // namespace rigcert
