#pragma once

#include <vector>

#include "rigcert/certificate.hpp"
#include "rigcert/complex_box.hpp"
#include "rigcert/quadrature.hpp"

namespace rigcert {

/// Identity residuals are computed with this many bits on top of the
/// requested precision, so the 2^(8 - bits) width bound has slack.
inline constexpr Precision kIdentityGuardBits = 16;

/// e^{i pi} + 1, e^pi - (e^{i pi})^{-i} and i^i - e^{-pi/2}: each residual
/// box must contain 0 and be narrower than 2^(8 - bits).
std::vector<Certificate> certify_euler_identities(Precision bits);

/// sin(6 pi / 5) - cos(e) > 0 and 4 log_pi(e) + e ln(pi) - 2 pi > 0.
std::vector<Certificate> certify_trig_log_inequalities(Precision bits, Precision cap = kDefaultPrecisionCap);

/// |e^{1-z} + e^{conj z}| > pi for all z, its z = -i instance, and |e^i - pi| > e.
std::vector<Certificate> certify_modulus_inequalities(Precision bits, Precision cap = kDefaultPrecisionCap);

/// pi < 2 sqrt(e), cross-checked against the sign of 4e - pi^2.
Certificate certify_pi_bound(Precision bits, Precision cap = kDefaultPrecisionCap);

/// (1/pi)(e^{e - pi a} - e^{e - pi b}), the integral of e^{e - pi x} over [a, b].
Interval gaussian_upper_bound(const Interval& a, const Interval& b);

/// Integral of e^{-x^2} over [a, b] strictly below gaussian_upper_bound.
Certificate certify_gaussian_bound(const ConstExpr& a, const ConstExpr& b, Precision bits,
                                   Precision cap = kDefaultPrecisionCap);

/// x + e/x - sqrt2/x^2 + sqrt3/x^3 - sqrt5/x^4 + sqrt13/x^5 > pi for x > 0,
/// reduced to positivity of the sextic on (0, inf).
Certificate certify_reciprocal_inequality(Precision bits, Precision cap = kDefaultPrecisionCap);

/// Enclosure of |e^{1-z} + e^{conj z}| for a single box z.
Interval modulus_sum(const ComplexBox& z);

}  // namespace rigcert
