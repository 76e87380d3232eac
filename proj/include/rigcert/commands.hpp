#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rigcert/ledger.hpp"

namespace rigcert {

/// Bad command-line input (maps to exit status 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Certify, Roots, Ybe, Gauss, Constants };
enum class OutputFormat { Text, Json };

struct RunConfig {
  Command command = Command::Certify;
  Precision precision = kDefaultPrecision;
  Precision precision_cap = kDefaultPrecisionCap;
  double tolerance = kFastTolerance;
  YbeMode mode = YbeMode::Fast;
  OutputFormat output = OutputFormat::Text;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

/// Name of the environment variable that overrides the default precision.
inline constexpr const char* kPrecisionEnv = "RIGCERT_PRECISION";

/// Value of RIGCERT_PRECISION, or `fallback` when unset. Throws UsageError when malformed.
Precision precision_from_env(Precision fallback = kDefaultPrecision);

/// Parses "2", "1+1i", "1+i", "-0.5i", "3-2i".
std::complex<double> parse_complex(std::string_view text);

nlohmann::json config_json(const RunConfig& config);

/// Selected claims (all when `claims` is empty).
Ledger cmd_certify(const RunConfig& config, const std::vector<std::string>& claims = {});
/// Root count of the comma-separated ConstExpr coefficients over `region`.
Ledger cmd_roots(const RunConfig& config, std::string_view coeffs, std::string_view region = "all");
/// One YBE entry and one series entry per alpha, all on the same seeded samples.
Ledger cmd_ybe(const RunConfig& config, const std::vector<std::complex<double>>& alphas, std::size_t n_samples);
Ledger cmd_gauss(const RunConfig& config, std::string_view a, std::string_view b);
/// Enclosures of the given expressions, or of pi, e and the square roots by default.
Ledger cmd_constants(const RunConfig& config, const std::vector<std::string>& expressions = {});

}  // namespace rigcert
