#include "spikecount/verification/oracles.hpp"

#include <algorithm>

namespace spikecount::verification {

std::uint64_t oracle_first_run_length(const std::vector<bool> &bits) {
  auto first = std::find(bits.begin(), bits.end(), true);
  auto end = std::find(first, bits.end(), false);
  return static_cast<std::uint64_t>(end - first);
}

std::uint64_t oracle_total_spikes(const std::vector<bool> &bits) {
  return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), true));
}

std::size_t first_run_end(const std::vector<bool> &bits) {
  auto first = std::find(bits.begin(), bits.end(), true);
  if (first == bits.end()) return 0;
  return static_cast<std::size_t>(std::find(first, bits.end(), false) - bits.begin());
}

std::size_t last_run_settle_time(const std::vector<bool> &bits) {
  auto last = std::find(bits.rbegin(), bits.rend(), true);
  if (last == bits.rend()) return 0;
  // Index just past the last spike, plus one settling step.
  return static_cast<std::size_t>(bits.rend() - last) + 1;
}

} // namespace spikecount::verification
