#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace spikecount {

// Weights and biases are exact. All constructed networks use short decimals,
// so comparisons at the strict threshold never depend on rounding.
using Rational = boost::rational<std::int64_t>;

/// Parses "-1.5", "3", "0.25" or "1/3". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Exact decimal text when the denominator has only factors 2 and 5,
/// otherwise "p/q". Always accepted by parse_rational.
std::string format_rational(const Rational &value);

} // namespace spikecount
