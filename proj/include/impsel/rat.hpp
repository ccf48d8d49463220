#pragma once

#include <boost/rational.hpp>
#include <string>

namespace impsel {

// Exact rational arithmetic for additive gaps and thresholds. Values at desk
// scale are tiny fractions of small integers, so 64 bits is plenty.
using Rat = boost::rational<long long>;

std::string rat_to_string(const Rat& r);

// Accepts "p" or "p/q" with q > 0. Decimal notation is rejected so thresholds
// like 1/2 and 2/3 are never silently rounded.
Rat parse_rat(const std::string& text);

}  // namespace impsel
