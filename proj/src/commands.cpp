#include "rigcert/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <regex>

#include "rigcert/claims.hpp"
#include "rigcert/factorable.hpp"
#include "rigcert/positivity.hpp"
#include "rigcert/transcendental.hpp"

namespace rigcert {
namespace {

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Certify:
      return "certify";
    case Command::Roots:
      return "roots";
    case Command::Ybe:
      return "ybe";
    case Command::Gauss:
      return "gauss";
    case Command::Constants:
      return "constants";
  }
  return "?";
}

Ledger start(const RunConfig& config, Command command) {
  Ledger ledger;
  ledger.command = std::string(command_name(command));
  ledger.config = config_json(config);
  return ledger;
}

ConstExpr parse_expr(std::string_view text, std::string_view what) {
  try {
    return ConstExpr::parse(text);
  } catch (const ParseError& err) {
    throw UsageError(std::string(what) + ": " + err.what());
  }
}

void check_precision(const RunConfig& config) {
  if (config.precision < kMinPrecision) {
    throw UsageError("precision must be at least " + std::to_string(kMinPrecision) + " bits");
  }
  if (config.precision_cap < config.precision) throw UsageError("precision cap is below the working precision");
}

std::string alpha_label(std::complex<double> alpha) {
  char buf[64];
  if (alpha.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", alpha.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", alpha.real(), alpha.imag());
  }
  return buf;
}

LedgerEntry series_entry(std::complex<double> alpha) {
  const FastMatrix j = make_j(alpha);
  constexpr int kTerms = 30;
  constexpr double kTolerance = 1e-12;
  const double third = std::numbers::pi / 3.0;
  LedgerEntry e;
  e.claim_id = "sec3.exp_series[alpha=" + alpha_label(alpha) + "]";
  e.kind = "ybe";
  e.pass = true;
  double worst = 0.0;
  nlohmann::json points = nlohmann::json::array();
  for (double x : {1.0, -1.0, third, -third}) {
    const SeriesExp series = exp_of_xj(j, x, kTerms);
    const double diff = norm_inf(series.value - r_of_x(j, x));
    worst = std::max(worst, diff);
    e.pass = e.pass && diff < kTolerance;
    points.push_back({{"x", x}, {"difference", diff}, {"remainder_bound", series.remainder_bound}});
  }
  e.verdict = e.pass ? "PASS" : "FAIL";
  char worst_text[32];
  std::snprintf(worst_text, sizeof worst_text, "%.3g", worst);
  e.summary = std::string("||sum_{k<=30} (xJ)^k/k! - R(x)||_inf <= ") + worst_text + " for x in {+-1, +-pi/3}";
  e.detail = {{"terms", kTerms}, {"tolerance", kTolerance}, {"points", points}};
  return e;
}

}  // namespace

Precision precision_from_env(Precision fallback) {
  const char* raw = std::getenv(kPrecisionEnv);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view text(raw);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < kMinPrecision) {
    throw UsageError(std::string(kPrecisionEnv) + " must be an integer >= " + std::to_string(kMinPrecision));
  }
  return value;
}

std::complex<double> parse_complex(std::string_view text) {
  static const std::regex pattern(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*[ij])?\s*$)");
  static const std::regex imaginary_only(R"(^\s*([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*[ij]\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, imaginary_only)) {
    const double magnitude = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -magnitude : magnitude};
  }
  if (s.find_first_not_of(" \t") == std::string::npos || !std::regex_match(s, m, pattern) ||
      (!m[1].matched && !m[2].matched)) {
    throw UsageError("cannot parse complex number '" + s + "'");
  }
  const double re = m[1].matched ? std::stod(m[1].str()) : 0.0;
  double im = 0.0;
  if (m[2].matched) {
    im = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (m[2].str() == "-") im = -im;
  }
  return {re, im};
}

nlohmann::json config_json(const RunConfig& c) {
  return {{"command", command_name(c.command)},
          {"precision", c.precision},
          {"precision_cap", c.precision_cap},
          {"tolerance", c.tolerance},
          {"mode", c.mode == YbeMode::Fast ? "fast" : "rigorous"},
          {"output", c.output == OutputFormat::Json ? "json" : "text"},
          {"seed", c.seed}};
}

Ledger cmd_certify(const RunConfig& config, const std::vector<std::string>& claims) {
  check_precision(config);
  Ledger ledger = start(config, Command::Certify);
  const std::vector<std::string>& ids = claims.empty() ? all_claim_ids() : claims;
  try {
    ledger.entries = run_claims(ids, config.precision, config.precision_cap, config.jobs);
  } catch (const UnknownClaim& err) {
    throw UsageError(err.what());
  }
  ledger.sort();
  return ledger;
}

Ledger cmd_roots(const RunConfig& config, std::string_view coeffs, std::string_view region_text) {
  check_precision(config);
  Ledger ledger = start(config, Command::Roots);
  IntervalPolynomial p = [&] {
    try {
      return IntervalPolynomial::parse(coeffs);
    } catch (const ParseError& err) {
      throw UsageError(std::string("coefficients: ") + err.what());
    }
  }();
  Region region;
  try {
    region = Region::parse(region_text);
  } catch (const ParseError& err) {
    throw UsageError(std::string("region: ") + err.what());
  }

  RootCountCertificate roots;
  try {
    roots = sturm_count(p, region, config.precision, config.precision_cap);
  } catch (const IllDefinedDegree& err) {
    throw UsageError(err.what());
  }
  LedgerEntry entry = ledger_entry("roots", roots);
  entry.detail["polynomial"] = p.to_string();
  if (p.degree() == 2) {
    entry.detail["discriminant"] = interval_json(quadratic_discriminant(p, roots.precision_used));
  }
  ledger.entries.push_back(std::move(entry));

  if (p.degree() == 2) {
    const auto a = p.coeffs()[0].as_integer();
    const auto b = p.coeffs()[1].as_integer();
    const auto c = p.coeffs()[2].as_integer();
    if (a && b && c && *a != 0 && *a + *c == *b) {
      const FactorableRoots exact = solve_factorable_quadratic(*a, *c);
      const bool first = is_exact_root(*a, *b, *c, exact.first);
      const bool second = is_exact_root(*a, *b, *c, exact.second);
      LedgerEntry f;
      f.claim_id = "roots.factorization";
      f.kind = "factorization";
      f.pass = first && second;
      f.verdict = f.pass ? "CERTIFIED" : "REFUTED";
      f.summary = "(" + std::to_string(*a) + " x + " + std::to_string(*c) + ")(x + 1): roots " +
                  to_string(exact.first) + ", " + to_string(exact.second);
      f.detail = {{"roots", {to_string(exact.first), to_string(exact.second)}},
                  {"exact_substitution_zero", {first, second}}};
      ledger.entries.push_back(std::move(f));
    }
  }
  ledger.sort();
  return ledger;
}

Ledger cmd_ybe(const RunConfig& config, const std::vector<std::complex<double>>& alphas, std::size_t n_samples) {
  if (alphas.empty()) throw UsageError("need at least one alpha");
  for (const auto& alpha : alphas) {
    if (alpha == std::complex<double>()) throw UsageError("alpha must be non-zero");
  }
  if (n_samples == 0) throw UsageError("need at least one sample");
  if (config.mode == YbeMode::Rigorous) check_precision(config);
  Ledger ledger = start(config, Command::Ybe);
  const std::vector<YbeSample> samples = random_samples(n_samples, config.seed);
  for (const auto& alpha : alphas) {
    const YbeReport report = config.mode == YbeMode::Fast
                                 ? check_colored_ybe(make_j(alpha), samples, config.tolerance)
                                 : check_colored_ybe(make_j_rigorous(alpha, config.precision), samples, config.precision);
    LedgerEntry entry = ledger_entry("sec3.ybe[alpha=" + alpha_label(alpha) + "]", report);
    entry.detail["j"] = matrix_json(make_j(alpha));
    ledger.entries.push_back(std::move(entry));
    ledger.entries.push_back(series_entry(alpha));
  }
  ledger.sort();
  return ledger;
}

Ledger cmd_gauss(const RunConfig& config, std::string_view a_text, std::string_view b_text) {
  check_precision(config);
  Ledger ledger = start(config, Command::Gauss);
  const ConstExpr a = parse_expr(a_text, "a");
  const ConstExpr b = parse_expr(b_text, "b");
  Interval lo;
  Interval hi;
  try {
    lo = a.evaluate(config.precision);
    hi = b.evaluate(config.precision);
  } catch (const DomainError& err) {
    throw UsageError(err.what());
  }
  if (!(lo.hi() < hi.lo())) throw UsageError("gauss needs a < b");

  Certificate cert = certify_gaussian_bound(a, b, config.precision, config.precision_cap);
  LedgerEntry bound = ledger_entry(cert);
  const nlohmann::json& interior = cert.witness["pi_half_interior"];
  bound.summary += "; pi/2 interior: " + (interior.is_null() ? std::string("undecided") : interior.dump());
  ledger.entries.push_back(std::move(bound));

  const QuadratureResult integral = integrate_gaussian(a, b, cert.precision_used);
  LedgerEntry q;
  q.claim_id = "sec4.gauss.integral";
  q.kind = "quadrature";
  q.pass = integral.value.is_finite();
  q.verdict = q.pass ? "ENCLOSED" : "FAILED";
  q.summary = "int_" + a.to_string() + "^" + b.to_string() + " e^{-x^2} dx in " + integral.value.to_string(12);
  q.detail = {{"value", interval_json(integral.value)},
              {"subdivisions", integral.subdivisions},
              {"a", a.to_string()},
              {"b", b.to_string()}};
  ledger.entries.push_back(std::move(q));
  ledger.sort();
  return ledger;
}

Ledger cmd_constants(const RunConfig& config, const std::vector<std::string>& expressions) {
  check_precision(config);
  Ledger ledger = start(config, Command::Constants);
  static const std::vector<std::string> defaults = {"pi", "e", "sqrt(2)", "sqrt(3)", "sqrt(5)", "sqrt(13)"};
  for (const std::string& text : expressions.empty() ? defaults : expressions) {
    const ConstExpr expr = parse_expr(text, "expression");
    LedgerEntry e;
    e.claim_id = "const:" + text;
    e.kind = "constant";
    try {
      const Interval value = eval_const(expr, config.precision);
      e.pass = value.is_finite();
      e.verdict = e.pass ? "ENCLOSED" : "NON-FINITE";
      e.summary = value.to_string(decimal_digits(config.precision) - 2);
      e.detail = {{"expression", expr.to_string()}, {"value", interval_json(value)}, {"width", value.width()}};
    } catch (const DomainError& err) {
      e.pass = false;
      e.verdict = "DOMAIN-ERROR";
      e.summary = err.what();
      e.detail = {{"expression", expr.to_string()}, {"error", err.what()}};
    }
    ledger.entries.push_back(std::move(e));
  }
  return ledger;
}

}  // namespace rigcert
