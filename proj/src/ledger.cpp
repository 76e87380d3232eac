#include "rigcert/ledger.hpp"

#include <algorithm>
#include <sstream>

namespace rigcert {

LedgerEntry ledger_entry(const Certificate& c) {
  LedgerEntry e;
  e.claim_id = c.claim_id;
  e.kind = "certificate";
  e.verdict = std::string(to_string(c.verdict));
  e.pass = c.certified();
  e.summary = c.statement + "; margin " + c.margin.to_string(10);
  e.detail = to_json(c);
  return e;
}

LedgerEntry ledger_entry(const std::string& claim_id, const RootCountCertificate& c,
                         std::optional<int> expected_count) {
  LedgerEntry e;
  e.claim_id = claim_id;
  e.kind = "root_count";
  e.verdict = c.certified() ? "CERTIFIED" : "INCONCLUSIVE";
  e.pass = c.certified() && (!expected_count || *expected_count == c.count);
  e.summary = c.certified() ? std::to_string(c.count) + " distinct real root(s) in " + c.region.to_string()
                            : "undecided: " + c.offending;
  e.detail = to_json(c);
  if (expected_count) e.detail["expected_count"] = *expected_count;
  return e;
}

LedgerEntry ledger_entry(const std::string& claim_id, const YbeReport& r) {
  LedgerEntry e;
  e.claim_id = claim_id;
  e.kind = "ybe";
  e.verdict = r.pass ? "PASS" : "FAIL";
  e.pass = r.pass;
  std::ostringstream out;
  out << "colored YBE over " << r.samples.size() << " samples, max residual " << r.max_residual;
  if (r.mode == YbeMode::Rigorous) out << ", max residual width " << r.max_residual_width;
  e.summary = out.str();
  e.detail = to_json(r);
  return e;
}

bool Ledger::overall_pass() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const LedgerEntry& e) { return e.pass; });
}

void Ledger::sort() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const LedgerEntry& a, const LedgerEntry& b) { return a.claim_id < b.claim_id; });
}

nlohmann::json Ledger::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const LedgerEntry& e : entries) {
    rows.push_back({{"claim_id", e.claim_id},
                    {"kind", e.kind},
                    {"verdict", e.verdict},
                    {"pass", e.pass},
                    {"summary", e.summary},
                    {"detail", e.detail}});
  }
  return {{"schema", kLedgerSchema},
          {"tool", "rigcert"},
          {"version", RIGCERT_VERSION},
          {"command", command},
          {"config", config},
          {"entries", rows},
          {"overall", overall_pass() ? "pass" : "fail"}};
}

std::string Ledger::to_text() const {
  std::ostringstream out;
  out << "rigcert " << RIGCERT_VERSION << " " << command << " " << config.dump() << "\n";
  std::size_t width = 8;
  for (const LedgerEntry& e : entries) width = std::max(width, e.claim_id.size());
  std::size_t passed = 0;
  for (const LedgerEntry& e : entries) {
    out << "  " << e.verdict << std::string(e.verdict.size() < 13 ? 13 - e.verdict.size() : 1, ' ') << e.claim_id
        << std::string(width - e.claim_id.size() + 2, ' ') << e.summary << "\n";
    if (e.pass) ++passed;
  }
  out << "overall: " << (overall_pass() ? "PASS" : "FAIL") << " (" << passed << "/" << entries.size() << ")\n";
  return out.str();
}

}  // namespace rigcert
