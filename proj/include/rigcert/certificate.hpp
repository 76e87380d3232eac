#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "rigcert/interval.hpp"

namespace rigcert {

enum class Verdict { Certified, Refuted, Inconclusive };

std::string_view to_string(Verdict verdict);

/// How `margin` is read. Inequalities need a one-signed margin; identity
/// enclosures need a residual box that contains 0 and is narrow enough.
enum class ClaimKind { Inequality, IdentityEnclosure };

struct Certificate {
  std::string claim_id;
  std::string statement;
  ClaimKind kind = ClaimKind::Inequality;
  Verdict verdict = Verdict::Inconclusive;
  /// lhs - rhs of the strict inequality "lhs > rhs", or |residual| for identities.
  Interval margin;
  Precision precision_used = 0;
  nlohmann::json witness = nlohmann::json::object();

  bool certified() const { return verdict == Verdict::Certified; }
};

/// CERTIFIED iff lo > 0, REFUTED iff hi < 0, otherwise INCONCLUSIVE.
Verdict verdict_from_margin(const Interval& margin);

/// Enough decimal digits to tell `bits`-bit neighbours apart.
int decimal_digits(Precision bits);

/// {"lo": "...", "hi": "..."} with outward decimal rounding.
nlohmann::json interval_json(const Interval& x);
nlohmann::json to_json(const Certificate& certificate);

/// Re-runs `attempt` at doubled precision while it is INCONCLUSIVE, up to `cap`.
Certificate escalate(const std::function<Certificate(Precision)>& attempt, Precision bits, Precision cap);

}  // namespace rigcert
