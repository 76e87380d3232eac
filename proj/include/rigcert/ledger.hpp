#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigcert/certificate.hpp"
#include "rigcert/sturm.hpp"
#include "rigcert/ybe.hpp"

namespace rigcert {

inline constexpr int kLedgerSchema = 1;

/// One row of a certification ledger.
struct LedgerEntry {
  std::string claim_id;
  std::string kind;  // certificate, root_count, factorization, ybe, quadrature, constant
  std::string verdict;
  bool pass = false;
  std::string summary;
  nlohmann::json detail;
};

LedgerEntry ledger_entry(const Certificate& certificate);
/// Passes when certified and, if given, the count matches `expected_count`.
LedgerEntry ledger_entry(const std::string& claim_id, const RootCountCertificate& certificate,
                         std::optional<int> expected_count = std::nullopt);
LedgerEntry ledger_entry(const std::string& claim_id, const YbeReport& report);

struct Ledger {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<LedgerEntry> entries;

  /// True iff every entry passes (and there is at least one).
  bool overall_pass() const;
  /// Orders entries by claim_id.
  void sort();
  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace rigcert
