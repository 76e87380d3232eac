#include "rigcert/sturm.hpp"

#include <cctype>
#include <variant>

namespace rigcert {
namespace {

struct Undecided {
  std::string what;
};

// Drops exact-zero leading terms. A leading term that merely encloses zero
// makes the degree unknowable at this precision.
std::variant<IntervalCoeffs, Undecided> trim(IntervalCoeffs poly, std::string_view label) {
  std::size_t first = 0;
  while (first < poly.size() && poly[first].is_exact_zero()) ++first;
  if (first < poly.size() && poly[first].contains_zero()) {
    return Undecided{"leading coefficient of " + std::string(label) + " encloses zero: " + poly[first].to_string(8)};
  }
  poly.erase(poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(first));
  return poly;
}

// Rescales by a power of two so the largest coefficient is O(1). Exact, and
// keeps pseudo-remainder growth from running away.
void normalize(IntervalCoeffs& poly) {
  mpfr_exp_t top = 0;
  bool any = false;
  for (const Interval& c : poly) {
    for (const BigFloat* end : {&c.lo(), &c.hi()}) {
      if (end->is_zero() || !end->is_finite()) continue;
      const mpfr_exp_t e = mpfr_get_exp(end->get());
      if (!any || e > top) top = e;
      any = true;
    }
  }
  if (!any || top == 0) return;
  for (Interval& c : poly) c = ldexp(c, -static_cast<long>(top));
}

// Negated remainder of a by b up to a positive factor.
std::variant<IntervalCoeffs, Undecided> next_in_chain(const IntervalCoeffs& a, const IntervalCoeffs& b,
                                                      std::string_view label) {
  const std::size_t n = b.size() - 1;
  const Interval& lead_b = b.front();
  const int sign_b = lead_b.is_positive() ? 1 : -1;
  IntervalCoeffs r = a;
  int steps = 0;
  while (!r.empty() && r.size() - 1 >= n) {
    const Interval lead_r = r.front();
    IntervalCoeffs reduced;
    reduced.reserve(r.size() - 1);
    for (std::size_t i = 1; i < r.size(); ++i) {
      Interval term = lead_b * r[i];
      if (i <= n) term = term - lead_r * b[i];
      reduced.push_back(std::move(term));
    }
    ++steps;
    auto trimmed = trim(std::move(reduced), label);
    if (auto* u = std::get_if<Undecided>(&trimmed)) return *u;
    r = std::move(std::get<IntervalCoeffs>(trimmed));
  }
  // r = lead_b^steps * rem(a, b); the next chain member is -rem(a, b).
  const bool positive_factor = sign_b > 0 || steps % 2 == 0;
  if (positive_factor) {
    for (Interval& c : r) c = -c;
  }
  normalize(r);
  return r;
}

std::variant<std::vector<IntervalCoeffs>, Undecided> build_chain(const IntervalCoeffs& p) {
  std::vector<IntervalCoeffs> chain{p};
  if (p.size() == 1) return chain;
  IntervalCoeffs dp = derivative(p);
  normalize(dp);
  chain.push_back(std::move(dp));
  while (chain.back().size() > 1) {
    const std::string label = "chain[" + std::to_string(chain.size()) + "]";
    auto next = next_in_chain(chain[chain.size() - 2], chain.back(), label);
    if (auto* u = std::get_if<Undecided>(&next)) return *u;
    auto& r = std::get<IntervalCoeffs>(next);
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_at_infinity(const IntervalCoeffs& poly, bool negative) {
  const int lead = poly.front().is_positive() ? 1 : -1;
  const bool odd = (poly.size() - 1) % 2 == 1;
  return (negative && odd) ? -lead : lead;
}

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct EndpointRoot {
  std::string what;
};

std::variant<SturmSigns, Undecided, EndpointRoot> signs_at(const std::vector<IntervalCoeffs>& chain,
                                                          const Interval& x, const std::string& label) {
  SturmSigns row;
  row.point = label;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Interval value = horner(chain[i], x);
    const auto s = value.sign();
    if (i == 0 && s == 0) return EndpointRoot{"polynomial vanishes exactly at " + label};
    if (!s) {
      return Undecided{"sign of chain[" + std::to_string(i) + "] at " + label + " undecided: " + value.to_string(8)};
    }
    row.signs.push_back(*s);
  }
  row.variations = variations(row.signs);
  return row;
}

SturmSigns signs_at_infinity(const std::vector<IntervalCoeffs>& chain, bool negative) {
  SturmSigns row;
  row.point = negative ? "-inf" : "+inf";
  for (const IntervalCoeffs& poly : chain) row.signs.push_back(sign_at_infinity(poly, negative));
  row.variations = variations(row.signs);
  return row;
}

RootCountCertificate undecided(RootCountCertificate cert, std::string what) {
  cert.verdict = RootCountCertificate::Verdict::Inconclusive;
  cert.count = -1;
  cert.offending = std::move(what);
  return cert;
}

}  // namespace

Region Region::parse(std::string_view text) {
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  }
  if (trimmed.empty() || trimmed == "all" || trimmed == "reals") return all_reals();
  if (trimmed == "positive" || trimmed == "(0,inf)") return positive_half_line();
  if (trimmed.size() < 5 || trimmed.front() != '(' || trimmed.back() != ')') {
    throw ParseError("region must be 'all', 'positive' or '(a,b)'", 0);
  }
  const std::string body = trimmed.substr(1, trimmed.size() - 2);
  int depth = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')') --depth;
    if (body[i] == ',' && depth == 0) {
      return open(ConstExpr::parse(body.substr(0, i)), ConstExpr::parse(body.substr(i + 1)));
    }
  }
  throw ParseError("region '(a,b)' needs two endpoints", 0);
}

std::string Region::to_string() const {
  switch (kind) {
    case Kind::AllReals:
      return "(-inf, inf)";
    case Kind::PositiveHalfLine:
      return "(0, inf)";
    case Kind::Open:
      return "(" + a->to_string() + ", " + b->to_string() + ")";
  }
  return "?";
}

RootCountCertificate sturm_count_once(const IntervalCoeffs& coeffs, const Region& region, Precision bits) {
  RootCountCertificate cert;
  cert.region = region;
  cert.precision_used = bits;

  auto built = build_chain(coeffs);
  if (auto* u = std::get_if<Undecided>(&built)) return undecided(std::move(cert), u->what);
  const auto& chain = std::get<std::vector<IntervalCoeffs>>(built);
  for (const IntervalCoeffs& poly : chain) cert.chain_degrees.push_back(static_cast<int>(poly.size()) - 1);

  SturmSigns left;
  SturmSigns right;
  switch (region.kind) {
    case Region::Kind::AllReals:
      left = signs_at_infinity(chain, true);
      right = signs_at_infinity(chain, false);
      break;
    case Region::Kind::PositiveHalfLine: {
      auto at_zero = signs_at(chain, Interval(0, bits), "0");
      if (auto* u = std::get_if<Undecided>(&at_zero)) return undecided(std::move(cert), u->what);
      if (auto* r = std::get_if<EndpointRoot>(&at_zero)) return undecided(std::move(cert), r->what);
      left = std::get<SturmSigns>(at_zero);
      right = signs_at_infinity(chain, false);
      break;
    }
    case Region::Kind::Open: {
      const Interval a = region.a->evaluate(bits);
      const Interval b = region.b->evaluate(bits);
      if (b.hi() <= a.lo()) throw std::invalid_argument("empty region " + region.to_string());
      if (!(a.hi() < b.lo())) return undecided(std::move(cert), "region endpoints overlap at this precision");
      auto at_a = signs_at(chain, a, region.a->to_string());
      if (auto* u = std::get_if<Undecided>(&at_a)) return undecided(std::move(cert), u->what);
      if (auto* r = std::get_if<EndpointRoot>(&at_a)) return undecided(std::move(cert), r->what);
      auto at_b = signs_at(chain, b, region.b->to_string());
      if (auto* u = std::get_if<Undecided>(&at_b)) return undecided(std::move(cert), u->what);
      if (auto* r = std::get_if<EndpointRoot>(&at_b)) return undecided(std::move(cert), r->what);
      left = std::get<SturmSigns>(at_a);
      right = std::get<SturmSigns>(at_b);
      break;
    }
  }
  cert.verdict = RootCountCertificate::Verdict::Certified;
  cert.count = left.variations - right.variations;
  cert.sturm_chain_signs = {std::move(left), std::move(right)};
  return cert;
}

RootCountCertificate sturm_count(const IntervalPolynomial& p, const Region& region, Precision bits, Precision cap) {
  if (bits < kMinPrecision) throw std::invalid_argument("precision below minimum");
  IntervalCoeffs coeffs = p.checked_coeffs(bits);
  RootCountCertificate cert = sturm_count_once(coeffs, region, bits);
  while (!cert.certified() && bits * 2 <= cap) {
    // An exact zero at an endpoint stays exact at every precision.
    if (cert.offending.find("vanishes exactly") != std::string::npos) break;
    bits *= 2;
    coeffs = p.checked_coeffs(bits);
    cert = sturm_count_once(coeffs, region, bits);
  }
  return cert;
}

Interval quadratic_discriminant(const IntervalPolynomial& p, Precision bits) {
  if (p.degree() != 2) {
    throw std::invalid_argument("discriminant needs degree 2, got degree " + std::to_string(p.degree()));
  }
  const IntervalCoeffs c = p.evaluate_coeffs(bits);
  return sqr(c[1]) - Interval(4, bits) * c[0] * c[2];
}

nlohmann::json to_json(const RootCountCertificate& cert) {
  nlohmann::json signs = nlohmann::json::array();
  for (const SturmSigns& row : cert.sturm_chain_signs) {
    signs.push_back({{"point", row.point}, {"signs", row.signs}, {"variations", row.variations}});
  }
  nlohmann::json out = {
      {"verdict", cert.certified() ? "CERTIFIED" : "INCONCLUSIVE"},
      {"count", cert.count},
      {"region", cert.region.to_string()},
      {"precision_used", cert.precision_used},
      {"chain_degrees", cert.chain_degrees},
      {"sturm_chain_signs", signs},
  };
  if (!cert.offending.empty()) out["offending"] = cert.offending;
  return out;
}

}  // namespace rigcert
