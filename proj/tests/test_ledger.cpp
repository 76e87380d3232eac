#include <gtest/gtest.h>

#include <cstdlib>

#include "rigcert/claims.hpp"
#include "rigcert/commands.hpp"

using namespace rigcert;

namespace {

RunConfig config(Command command) {
  RunConfig c;
  c.command = command;
  c.output = OutputFormat::Json;
  return c;
}

const LedgerEntry& entry(const Ledger& l, const std::string& id) {
  for (const LedgerEntry& e : l.entries)
    if (e.claim_id == id) return e;
  throw std::out_of_range(id);
}

}  // namespace

TEST(Claims, RegistryIsSortedAndComplete) {
  const auto& ids = all_claim_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_GE(ids.size(), 12u);
  for (const char* id : {"eq3.quadratic", "eq4.quartic", "sec2.mod.forall_z", "sec4.gauss.bound", "sec4.reciprocal"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_THROW(run_claim("bogus.claim", 64), UnknownClaim);
  EXPECT_THROW(claim_description("bogus.claim"), UnknownClaim);
}

TEST(Certify, AllClaimsPass) {
  const Ledger l = cmd_certify(config(Command::Certify));
  EXPECT_TRUE(l.overall_pass());
  EXPECT_EQ(l.entries.size(), all_claim_ids().size());
  for (const LedgerEntry& e : l.entries) EXPECT_EQ(e.verdict, "CERTIFIED") << e.claim_id;
}

TEST(Certify, SingleClaimCarriesDiscriminantWitness) {
  const Ledger l = cmd_certify(config(Command::Certify), {"eq3.quadratic"});
  ASSERT_EQ(l.entries.size(), 1u);
  const nlohmann::json& w = l.entries[0].detail["witness"];
  EXPECT_NEAR(std::stod(w["four_e_minus_pi_squared"]["lo"].get<std::string>()), 1.00352291274682232261, 1e-15);
}

TEST(Certify, UnknownClaimIsUsageError) {
  EXPECT_THROW(cmd_certify(config(Command::Certify), {"bogus.claim"}), UsageError);
}

TEST(Certify, ParallelMatchesSerial) {
  RunConfig serial = config(Command::Certify);
  RunConfig parallel = serial;
  parallel.jobs = 4;
  const nlohmann::json a = cmd_certify(serial).to_json();
  nlohmann::json b = cmd_certify(parallel).to_json();
  EXPECT_EQ(a["entries"].dump(), b["entries"].dump());
}

TEST(Ledger, JsonShape) {
  const nlohmann::json j = cmd_certify(config(Command::Certify), {"sec4.pi_bound"}).to_json();
  EXPECT_EQ(j["schema"], kLedgerSchema);
  EXPECT_EQ(j["tool"], "rigcert");
  EXPECT_EQ(j["overall"], "pass");
  EXPECT_EQ(j["config"]["precision"], 128);
  const nlohmann::json& margin = j["entries"][0]["detail"]["margin"];
  EXPECT_TRUE(margin["lo"].is_string());
  EXPECT_TRUE(margin["hi"].is_string());
}

TEST(Ledger, EmptyLedgerDoesNotPass) { EXPECT_FALSE(Ledger{}.overall_pass()); }

TEST(Ledger, DeterministicJson) {
  for (int k = 0; k < 2; ++k) {
    const std::string a = cmd_certify(config(Command::Certify)).to_json().dump();
    const std::string b = cmd_certify(config(Command::Certify)).to_json().dump();
    EXPECT_EQ(a, b);
  }
  RunConfig y = config(Command::Ybe);
  y.seed = 9;
  EXPECT_EQ(cmd_ybe(y, {{1.0, 1.0}}, 30).to_json().dump(), cmd_ybe(y, {{1.0, 1.0}}, 30).to_json().dump());
  RunConfig other = y;
  other.seed = 10;
  EXPECT_NE(cmd_ybe(y, {{1.0, 1.0}}, 30).to_json().dump(), cmd_ybe(other, {{1.0, 1.0}}, 30).to_json().dump());
}

TEST(Ledger, VerdictMonotonicityUnderPrecisionDoubling) {
  for (const std::string& id : all_claim_ids()) {
    const LedgerEntry lo = run_claim(id, 128);
    const LedgerEntry hi = run_claim(id, 256);
    EXPECT_EQ(lo.verdict, hi.verdict) << id;
    if (lo.detail.contains("margin")) {
      const double w_lo = std::stod(lo.detail["margin"]["hi"].get<std::string>()) -
                          std::stod(lo.detail["margin"]["lo"].get<std::string>());
      const double w_hi = std::stod(hi.detail["margin"]["hi"].get<std::string>()) -
                          std::stod(hi.detail["margin"]["lo"].get<std::string>());
      EXPECT_LE(w_hi, w_lo) << id;
    }
  }
}

TEST(Roots, Commands) {
  const Ledger none = cmd_roots(config(Command::Roots), "1,-pi,e");
  EXPECT_TRUE(none.overall_pass());
  EXPECT_EQ(entry(none, "roots").detail["count"], 0);

  const Ledger ex2 = cmd_roots(config(Command::Roots), "12345678,99999999,87654321");
  EXPECT_TRUE(ex2.overall_pass());
  const LedgerEntry& f = entry(ex2, "roots.factorization");
  EXPECT_EQ(f.detail["roots"][0], "-1");
  EXPECT_EQ(f.detail["roots"][1], "-9739369/1371742");
  EXPECT_EQ(entry(ex2, "roots").detail["count"], 2);

  EXPECT_EQ(entry(cmd_roots(config(Command::Roots), "1,0,1"), "roots").detail["count"], 0);
  EXPECT_THROW(cmd_roots(config(Command::Roots), "1,-pi,"), UsageError);
  EXPECT_THROW(cmd_roots(config(Command::Roots), "0,1"), UsageError);
}

TEST(Ybe, Commands) {
  const Ledger l = cmd_ybe(config(Command::Ybe), {{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}}, 100);
  EXPECT_TRUE(l.overall_pass());
  EXPECT_EQ(l.entries.size(), 6u);
  EXPECT_LT(entry(l, "sec3.ybe[alpha=1]").detail["max_residual"].get<double>(), 1e-12);
  EXPECT_THROW(cmd_ybe(config(Command::Ybe), {{0.0, 0.0}}, 10), UsageError);
}

TEST(Gauss, Commands) {
  const Ledger l = cmd_gauss(config(Command::Gauss), "1", "2");
  EXPECT_TRUE(l.overall_pass());
  const nlohmann::json& w = entry(l, "sec4.gauss.bound").detail["witness"];
  EXPECT_EQ(w["pi_half_interior"], true);
  EXPECT_NEAR(std::stod(w["gap"]["lo"].get<std::string>()), 0.0642, 1e-4);
  EXPECT_EQ(entry(cmd_gauss(config(Command::Gauss), "0", "1"), "sec4.gauss.bound").detail["witness"]["pi_half_interior"],
            false);
  EXPECT_THROW(cmd_gauss(config(Command::Gauss), "2", "1"), UsageError);
  EXPECT_THROW(cmd_gauss(config(Command::Gauss), "1", "1"), UsageError);
}

TEST(Constants, Defaults) {
  const Ledger l = cmd_constants(config(Command::Constants));
  EXPECT_TRUE(l.overall_pass());
  EXPECT_EQ(l.entries.size(), 6u);
  const Ledger bad = cmd_constants(config(Command::Constants), {"ln(0)"});
  EXPECT_FALSE(bad.overall_pass());
  EXPECT_THROW(cmd_constants(config(Command::Constants), {"2 +"}), UsageError);
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("2"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("1+1i"), std::complex<double>(1, 1));
  EXPECT_EQ(parse_complex("1+i"), std::complex<double>(1, 1));
  EXPECT_EQ(parse_complex("3-2i"), std::complex<double>(3, -2));
  EXPECT_EQ(parse_complex("-0.5i"), std::complex<double>(0, -0.5));
  EXPECT_EQ(parse_complex("i"), std::complex<double>(0, 1));
  EXPECT_EQ(parse_complex("1e-3+2j"), std::complex<double>(1e-3, 2));
  EXPECT_THROW(parse_complex(""), UsageError);
  EXPECT_THROW(parse_complex("1+"), UsageError);
  EXPECT_THROW(parse_complex("abc"), UsageError);
}

TEST(Environment, PrecisionOverride) {
  ::unsetenv(kPrecisionEnv);
  EXPECT_EQ(precision_from_env(128), 128);
  ::setenv(kPrecisionEnv, "256", 1);
  EXPECT_EQ(precision_from_env(128), 256);
  ::setenv(kPrecisionEnv, "12", 1);
  EXPECT_THROW(precision_from_env(128), UsageError);
  ::setenv(kPrecisionEnv, "abc", 1);
  EXPECT_THROW(precision_from_env(128), UsageError);
  ::unsetenv(kPrecisionEnv);
}
