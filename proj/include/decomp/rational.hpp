#pragma once

#include <string>

#include <boost/rational.hpp>

namespace decomp {

// Exact rational arithmetic for objective values and bound right-hand sides.
// Everything at this scale fits comfortably in 64 bits.
using Rational = boost::rational<long long>;

// "p/q" with q omitted when the value is an integer; used verbatim in reports.
std::string to_string(const Rational& value);

// Accepts "p" or "p/q"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace decomp
