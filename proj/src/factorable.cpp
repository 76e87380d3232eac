#include "rigcert/factorable.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace rigcert {
namespace {

long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rational component exceeds 64 bits");
  return z.get_si();
}

mpz_class to_mpz(long long v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

FactorableRoots solve_factorable_quadratic(long long a, long long c) {
  if (a == 0) throw std::invalid_argument("leading coefficient A must be non-zero");
  mpq_class second(-to_mpz(c), to_mpz(a));
  second.canonicalize();
  return {Rational{-1, 1}, Rational{to_ll(second.get_num()), to_ll(second.get_den())}};
}

bool is_exact_root(long long a, long long b, long long c, const Rational& r) {
  const mpq_class x(to_mpz(r.num), to_mpz(r.den));
  const mpq_class value = to_mpz(a) * x * x + to_mpz(b) * x + to_mpz(c);
  return value == 0;
}

}  // namespace rigcert
