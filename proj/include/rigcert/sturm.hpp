#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rigcert/polynomial.hpp"

namespace rigcert {

/// Open region for root counting: all reals, (a, b), or (0, inf).
struct Region {
  enum class Kind { AllReals, Open, PositiveHalfLine };

  Kind kind = Kind::AllReals;
  std::optional<ConstExpr> a;
  std::optional<ConstExpr> b;

  static Region all_reals() { return {}; }
  static Region positive_half_line() { return {Kind::PositiveHalfLine, {}, {}}; }
  static Region open(ConstExpr a, ConstExpr b) { return {Kind::Open, std::move(a), std::move(b)}; }
  /// "all", "positive", or "(a,b)" with ConstExpr endpoints.
  static Region parse(std::string_view text);

  std::string to_string() const;
};

/// Signs of every chain member at one evaluation point (0 = exact zero).
struct SturmSigns {
  std::string point;
  std::vector<int> signs;
  int variations = 0;
};

struct RootCountCertificate {
  enum class Verdict { Certified, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  /// Distinct real roots inside the region; -1 when inconclusive.
  int count = -1;
  Region region;
  Precision precision_used = 0;
  std::vector<int> chain_degrees;
  std::vector<SturmSigns> sturm_chain_signs;
  /// The sign query that could not be decided (inconclusive only).
  std::string offending;

  bool certified() const { return verdict == Verdict::Certified; }
};

/// Counts distinct real roots of `p` in `region` with an interval Sturm
/// chain. Undecidable signs double the precision up to `cap`; a root exactly
/// on a finite endpoint is inconclusive.
RootCountCertificate sturm_count(const IntervalPolynomial& p, const Region& region, Precision bits,
                                 Precision cap = kDefaultPrecisionCap);

/// The same chain on already-evaluated coefficients, without escalation.
RootCountCertificate sturm_count_once(const IntervalCoeffs& coeffs, const Region& region, Precision bits);

/// b^2 - 4ac for a degree-2 polynomial.
Interval quadratic_discriminant(const IntervalPolynomial& p, Precision bits);

nlohmann::json to_json(const RootCountCertificate& certificate);

}  // namespace rigcert
