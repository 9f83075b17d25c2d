#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spikecount::verification {

// Reference answers computed directly from the spike train, independent of
// any network.

/// Length of the maximal run of 1s starting at the first 1; 0 without spikes.
std::uint64_t oracle_first_run_length(const std::vector<bool> &bits);

/// Number of 1s.
std::uint64_t oracle_total_spikes(const std::vector<bool> &bits);

/// Index of the first 0 after the first run of spikes (first spike time plus
/// run length); 0 without spikes.
std::size_t first_run_end(const std::vector<bool> &bits);

/// One step after the first 0 that follows the last run of spikes; 0 without spikes.
std::size_t last_run_settle_time(const std::vector<bool> &bits);

} // namespace spikecount::verification
