#pragma once

#include <cstdint>

#include "spikecount/constructions.hpp"

namespace spikecount::verification {

/// True iff `state` is a clean TSC state storing X:
///  1. f is one-hot at X mod 4 (or entirely quiet when X == 0);
///  2. z_k equals bit k of X for every k >= 2 (X must fit in the digits);
///  3. in_i is quiet whenever X mod 2^(i+1) == 2^(i+1) - 1.
/// Carries are otherwise unconstrained.
bool check_clean_state(const FiringState &state, std::uint64_t X, const constructions::TscLayout &layout);

} // namespace spikecount::verification
