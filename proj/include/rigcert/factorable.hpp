#pragma once

#include <string>

namespace rigcert {

/// p/q in lowest terms with q > 0.
struct Rational {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& r);

struct FactorableRoots {
  Rational first;   // always -1
  Rational second;  // -c/a reduced
};

/// Roots of a x^2 + (a+c) x + c = (a x + c)(x + 1), computed exactly.
/// Throws std::invalid_argument when a == 0.
FactorableRoots solve_factorable_quadratic(long long a, long long c);

/// True when a r^2 + b r + c == 0 in exact rational arithmetic.
bool is_exact_root(long long a, long long b, long long c, const Rational& r);

}  // namespace rigcert
