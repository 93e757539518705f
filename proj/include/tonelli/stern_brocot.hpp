#pragma once

#include <optional>

#include "tonelli/interval.hpp"

namespace tonelli {

// The fraction of minimal denominator inside a bounded interval
// (topology-exact; integers count with denominator 1). nullopt only for
// empty point sets, which a well-formed Interval cannot represent except as
// a non-closed degenerate case.
std::optional<Rational> simplest_rational_in(const Interval& iv);

}  // namespace tonelli
