#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rigcert/ledger.hpp"

namespace rigcert {

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Stable identifiers of every built-in claim, sorted.
const std::vector<std::string>& all_claim_ids();

/// One-line description of a claim id; throws UnknownClaim.
const std::string& claim_description(const std::string& id);

/// Runs one claim at `bits`, escalating up to `cap`; throws UnknownClaim.
LedgerEntry run_claim(const std::string& id, Precision bits, Precision cap = kDefaultPrecisionCap);

/// Runs `ids` (possibly on `jobs` threads) and returns entries sorted by id.
std::vector<LedgerEntry> run_claims(const std::vector<std::string>& ids, Precision bits,
                                    Precision cap = kDefaultPrecisionCap, unsigned jobs = 1);

}  // namespace rigcert
