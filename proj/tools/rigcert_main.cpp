#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rigcert/claims.hpp"
#include "rigcert/commands.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const rigcert::Ledger& ledger, rigcert::OutputFormat format) {
  if (format == rigcert::OutputFormat::Json) {
    std::cout << ledger.to_json().dump(2) << '\n';
  } else {
    std::cout << ledger.to_text();
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rigcert;

  RunConfig config;
  try {
    config.precision = precision_from_env(config.precision);
  } catch (const UsageError& err) {
    std::cerr << "rigcert: " << err.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Rigorous certificates for constant inequalities, root counts, Gaussian bounds and colored YBE checks",
               "rigcert"};
  app.set_version_flag("--version", std::string(RIGCERT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string output = "text";
  app.add_option("-p,--precision", config.precision, "Working precision in bits (env RIGCERT_PRECISION)")
      ->check(CLI::Range(static_cast<long>(kMinPrecision), 1L << 20));
  app.add_option("--cap", config.precision_cap, "Largest precision tried when escalating");
  app.add_flag("--json", json, "Shorthand for --output json");
  app.add_option("-o,--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", config.tolerance, "Fast-mode residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", config.jobs, "Worker threads for certify")->check(CLI::Range(1u, 256u));

  auto* certify = app.add_subcommand("certify", "Certify claims from the built-in ledger");
  bool all = false;
  bool list = false;
  std::vector<std::string> claims;
  certify->add_flag("--all", all, "Run every claim");
  certify->add_flag("--list", list, "Print the claim ids and exit");
  certify->add_option("claims", claims, "Claim ids");

  auto* roots = app.add_subcommand("roots", "Count real roots by a Sturm chain");
  std::string coeffs;
  std::string region = "all";
  roots->add_option("coeffs", coeffs, "Comma-separated coefficients, leading first")->required();
  roots->add_option("--region", region, "all, positive, or (a,b)");

  auto* ybe = app.add_subcommand("ybe", "Check the colored Yang-Baxter equation for R(x) = cos x I + sin x J");
  std::vector<std::string> alpha_text;
  std::size_t samples = 100;
  std::string mode = "fast";
  ybe->add_option("--alpha", alpha_text, "Nonzero complex parameter(s), e.g. 2 or 1+1i (default 1, 2, 1+1i)");
  ybe->add_option("--samples", samples, "Number of random (x, y) points");
  ybe->add_option("--seed", config.seed, "Sampling seed");
  ybe->add_option("--mode", mode, "fast or rigorous")->check(CLI::IsMember({"fast", "rigorous"}));

  auto* gauss = app.add_subcommand("gauss", "Certify int_a^b e^{-x^2} dx against the exponential bound");
  std::string a_text;
  std::string b_text;
  gauss->add_option("a", a_text, "Lower limit")->required();
  gauss->add_option("b", b_text, "Upper limit")->required();

  auto* constants = app.add_subcommand("constants", "Print enclosures of constant expressions");
  std::vector<std::string> exprs;
  constants->add_option("exprs", exprs, "Expressions such as pi, e, sqrt(2)/3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }
  config.output = (json || output == "json") ? OutputFormat::Json : OutputFormat::Text;
  config.mode = mode == "rigorous" ? YbeMode::Rigorous : YbeMode::Fast;

  try {
    Ledger ledger;
    if (certify->parsed()) {
      if (list) {
        for (const std::string& id : all_claim_ids()) std::cout << id << "  " << claim_description(id) << '\n';
        return 0;
      }
      if (!all && claims.empty()) throw UsageError("give claim ids or --all");
      config.command = Command::Certify;
      ledger = cmd_certify(config, all ? std::vector<std::string>{} : claims);
    } else if (roots->parsed()) {
      config.command = Command::Roots;
      ledger = cmd_roots(config, coeffs, region);
    } else if (ybe->parsed()) {
      config.command = Command::Ybe;
      std::vector<std::complex<double>> alphas;
      if (alpha_text.empty()) alpha_text = {"1", "2", "1+1i"};
      for (const std::string& t : alpha_text) alphas.push_back(parse_complex(t));
      ledger = cmd_ybe(config, alphas, samples);
    } else if (gauss->parsed()) {
      config.command = Command::Gauss;
      ledger = cmd_gauss(config, a_text, b_text);
    } else {
      config.command = Command::Constants;
      ledger = cmd_constants(config, exprs);
    }
    emit(ledger, config.output);
    if (!ledger.overall_pass()) std::cerr << "rigcert: not every entry passed\n";
    return ledger.overall_pass() ? 0 : kExitFail;
  } catch (const UsageError& err) {
    std::cerr << "rigcert: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "rigcert: " << err.what() << '\n';
    return kExitFail;
  }
}
