#include "rigcert/claims.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>

#include "rigcert/factorable.hpp"
#include "rigcert/positivity.hpp"
#include "rigcert/transcendental.hpp"

namespace rigcert {
namespace {

using Runner = std::function<LedgerEntry(Precision, Precision)>;

struct Claim {
  std::string description;
  Runner run;
};

LedgerEntry pick(std::vector<Certificate> certificates, const std::string& id) {
  for (Certificate& c : certificates) {
    if (c.claim_id == id) return ledger_entry(c);
  }
  throw std::logic_error("certifier did not produce " + id);
}

Runner from_group(std::string id, std::function<std::vector<Certificate>(Precision, Precision)> group) {
  return [id = std::move(id), group = std::move(group)](Precision bits, Precision cap) {
    return pick(group(bits, cap), id);
  };
}

Runner no_real_roots(std::string id, IntervalPolynomial (*make)()) {
  return [id = std::move(id), make](Precision bits, Precision cap) {
    return ledger_entry(id, sturm_count(make(), Region::all_reals(), bits, cap), 0);
  };
}

LedgerEntry factorization_entry(Precision, Precision) {
  constexpr long long a = 12345678;
  constexpr long long b = 99999999;
  constexpr long long c = 87654321;
  const FactorableRoots roots = solve_factorable_quadratic(a, c);
  const bool first_exact = is_exact_root(a, b, c, roots.first);
  const bool second_exact = is_exact_root(a, b, c, roots.second);
  LedgerEntry e;
  e.claim_id = "sec4.ex2.factor";
  e.kind = "factorization";
  e.pass = (a + c == b) && first_exact && second_exact;
  e.verdict = e.pass ? "CERTIFIED" : "REFUTED";
  e.summary = "12345678 x^2 + 99999999 x + 87654321 = (12345678 x + 87654321)(x + 1): roots " +
              to_string(roots.first) + ", " + to_string(roots.second);
  e.detail = {{"a", a},
              {"b", b},
              {"c", c},
              {"roots", {to_string(roots.first), to_string(roots.second)}},
              {"exact_substitution_zero", {first_exact, second_exact}}};
  return e;
}

const std::map<std::string, Claim>& registry() {
  static const std::map<std::string, Claim> claims = [] {
    std::map<std::string, Claim> m;
    auto euler = [](Precision bits, Precision) { return certify_euler_identities(bits); };
    auto trig = [](Precision bits, Precision cap) { return certify_trig_log_inequalities(bits, cap); };
    auto modulus = [](Precision bits, Precision cap) { return certify_modulus_inequalities(bits, cap); };

    m["sec2.euler.e_i_pi"] = {"e^{i pi} + 1 = 0", from_group("sec2.euler.e_i_pi", euler)};
    m["sec2.euler.minus_one_pow_minus_i"] = {"e^pi = (-1)^{-i}",
                                             from_group("sec2.euler.minus_one_pow_minus_i", euler)};
    m["sec2.euler.i_pow_i"] = {"i^i = e^{-pi/2}", from_group("sec2.euler.i_pow_i", euler)};
    m["sec2.trig.cos_e_sin_6pi5"] = {"cos(e) < sin(6 pi / 5)", from_group("sec2.trig.cos_e_sin_6pi5", trig)};
    m["sec2.log.log_pi_e"] = {"4 log_pi(e) + e ln(pi) > 2 pi", from_group("sec2.log.log_pi_e", trig)};
    m["sec2.mod.forall_z"] = {"|e^{1-z} + e^{conj z}| > pi for all z", from_group("sec2.mod.forall_z", modulus)};
    m["sec2.mod.z_minus_i"] = {"|e^i + e^{1+i}| > pi", from_group("sec2.mod.z_minus_i", modulus)};
    m["sec2.mod.ei_minus_pi"] = {"|e^i - pi| > e", from_group("sec2.mod.ei_minus_pi", modulus)};

    m["eq3.quadratic"] = {"x^2 + e > pi x for all real x", [](Precision bits, Precision cap) {
                            Certificate cert = certify_positive(pi_e_quadratic(), Region::all_reals(), bits,
                                                                "eq3.quadratic", cap);
                            cert.statement = "x^2 + e > pi x for all real x";
                            const Precision w = cert.precision_used;
                            const Interval discriminant = quadratic_discriminant(pi_e_quadratic(), w);
                            cert.witness["four_e_minus_pi_squared"] = interval_json(-discriminant);
                            cert.witness["closed_form_minimum"] = interval_json(ldexp(-discriminant, -2));
                            return ledger_entry(cert);
                          }};
    m["eq4.quartic"] = {"x^2 > (sqrt2 x - sqrt3) / (x^2 - pi x + e) for all real x",
                        [](Precision bits, Precision cap) {
                          Certificate cert =
                              certify_positive(pi_e_quartic(), Region::all_reals(), bits, "eq4.quartic", cap);
                          cert.statement =
                              "x^2 > (sqrt2 x - sqrt3)/(x^2 - pi x + e) for all x, i.e. x^4 - pi x^3 + e x^2 - "
                              "sqrt2 x + sqrt3 > 0 since the denominator is positive";
                          return ledger_entry(cert);
                        }};
    m["sec4.pi_bound"] = {"pi < 2 sqrt(e)", [](Precision bits, Precision cap) {
                            return ledger_entry(certify_pi_bound(bits, cap));
                          }};
    m["sec4.ex1.roots"] = {"x^2 - pi x + e = 0 has no real solutions", no_real_roots("sec4.ex1.roots", pi_e_quadratic)};
    m["sec4.ex2.factor"] = {"12345678 x^2 + 99999999 x + 87654321 = 0 solved exactly", factorization_entry};
    m["sec4.ex3.roots"] = {"x^4 - pi x^3 + e x^2 - sqrt2 x + sqrt3 = 0 has no real solutions",
                           no_real_roots("sec4.ex3.roots", pi_e_quartic)};
    m["sec4.ex4.roots"] = {"x^6 - pi x^5 + e x^4 - sqrt2 x^3 + sqrt3 x^2 - sqrt5 x + sqrt13 = 0 has no real solutions",
                           no_real_roots("sec4.ex4.roots", pi_e_sextic)};
    m["sec4.gauss.bound"] = {"int_1^2 e^{-x^2} dx < (1/pi)(e^{e-pi} - e^{e-2pi})", [](Precision bits, Precision cap) {
                               return ledger_entry(
                                   certify_gaussian_bound(ConstExpr::integer(1), ConstExpr::integer(2), bits, cap));
                             }};
    m["sec4.reciprocal"] = {"x + e/x - sqrt2/x^2 + sqrt3/x^3 - sqrt5/x^4 + sqrt13/x^5 > pi for x > 0",
                            [](Precision bits, Precision cap) {
                              return ledger_entry(certify_reciprocal_inequality(bits, cap));
                            }};
    return m;
  }();
  return claims;
}

const Claim& lookup(const std::string& id) {
  const auto& claims = registry();
  const auto it = claims.find(id);
  if (it == claims.end()) throw UnknownClaim("unknown claim id '" + id + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& all_claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, claim] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

const std::string& claim_description(const std::string& id) { return lookup(id).description; }

LedgerEntry run_claim(const std::string& id, Precision bits, Precision cap) { return lookup(id).run(bits, cap); }

std::vector<LedgerEntry> run_claims(const std::vector<std::string>& ids, Precision bits, Precision cap,
                                    unsigned jobs) {
  for (const std::string& id : ids) lookup(id);
  std::vector<LedgerEntry> out(ids.size());
  if (jobs <= 1) {
    for (std::size_t k = 0; k < ids.size(); ++k) out[k] = run_claim(ids[k], bits, cap);
  } else {
    std::vector<std::future<void>> pending;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, ids.size()); ++t) {
      pending.push_back(std::async(std::launch::async, [&] {
        for (std::size_t k = next++; k < ids.size(); k = next++) out[k] = run_claim(ids[k], bits, cap);
      }));
    }
    for (auto& f : pending) f.get();
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LedgerEntry& a, const LedgerEntry& b) { return a.claim_id < b.claim_id; });
  return out;
}

}  // namespace rigcert
