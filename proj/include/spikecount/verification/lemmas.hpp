#pragma once

#include <cstdint>

#include "spikecount/verification/report.hpp"

namespace spikecount::verification {

// Trace-level checks of the behavioural lemmas, each over a finite range.

/// Mod-2 base under constant input: z0 at time t is t mod 2, for t <= t_max.
CheckResult check_mod2_lemma(std::size_t t_max);

/// Counter with n digits under constant input, t <= t_max: z_i is bit i of t
/// and, for t >= 1, in_i fires iff t mod 2^(i+1) is 0 or 2^(i+1)-1. At t = 0
/// every non-input neuron is quiet by the initial condition.
CheckResult check_binary_counter(std::uint32_t n, std::size_t t_max);

/// Capture persistence on the composed FCSC network with n digits, over every
/// input of length input_length: with t' the first time x is quiet and some z
/// fires, y is quiet up to t' and equals z(t') at every later step.
CheckResult check_capture(std::uint32_t n, std::size_t input_length);

/// Mod-4 counter: from clean value i and a burst of L spikes, exactly
/// f_{(i+k) mod 4} and f_{(i+k-1) mod 4} fire k steps in, and one quiet step
/// after the burst the counter is clean at (i+L) mod 4 and stays there.
CheckResult check_mod4_lemma(std::size_t max_burst);

/// TSC network with n digits: from the clean state storing X and a burst of
/// L spikes, the state L+1 steps later is clean storing X+L and is stable
/// under quiet input.
CheckResult check_tsc_lemma(std::uint32_t n, std::uint64_t max_value, std::size_t max_burst);

/// Every clean TSC state that fits in n digits maps to itself under quiet input.
CheckResult check_clean_state_stability(std::uint32_t n, std::size_t steps);

} // namespace spikecount::verification
