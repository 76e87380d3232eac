#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "rigcert/certificate.hpp"
#include "rigcert/sturm.hpp"

namespace rigcert {

/// An operation was called outside its stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enclosure [lower, upper] of min p(x) over a closed box.
struct MinimumEnclosure {
  Interval value;
  double argmin = 0.0;
  std::size_t boxes = 0;
};

/// Branch and bound over `box` using the tighter of the Horner and
/// mean-value forms. Stops once the lower bound is positive and within
/// `rel_tol` of the best upper bound, or after `max_boxes` bisections.
MinimumEnclosure enclose_minimum(const IntervalCoeffs& coeffs, const Interval& box, std::size_t max_boxes = 4000,
                                 double rel_tol = 1e-9);

/// Certifies p > 0 on `region`: no roots by Sturm, and a positive value at
/// one sample point. The margin is an enclosure of the minimum of p over a
/// bounded box that contains every minimiser in the region.
Certificate certify_positive(const IntervalPolynomial& p, const Region& region, Precision bits,
                             const std::string& claim_id = "poly.positive", Precision cap = kDefaultPrecisionCap);

}  // namespace rigcert
