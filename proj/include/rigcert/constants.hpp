#pragma once

#include "rigcert/interval.hpp"

namespace rigcert {

/// Enclosure of pi at `bits`; memoized per precision, safe to call concurrently.
Interval pi(Precision bits);
/// Enclosure of e = exp(1); memoized like pi().
Interval euler(Precision bits);

}  // namespace rigcert
