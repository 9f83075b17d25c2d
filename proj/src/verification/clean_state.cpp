#include "spikecount/verification/clean_state.hpp"

namespace spikecount::verification {

bool check_clean_state(const FiringState &state, std::uint64_t X, const constructions::TscLayout &layout) {
  if (X >> (layout.n + 1) != 0) return false;

  int hot = 0;
  for (std::uint32_t i = 0; i < 4; ++i) hot += state[layout.f[i]] ? 1 : 0;
  const bool quiet_zero = X == 0 && hot == 0;
  if (!quiet_zero && !(hot == 1 && state[layout.f[X % 4]])) return false;

  for (std::uint32_t k = 2; k <= layout.n; ++k) {
    if (state[layout.digit(k)] != static_cast<bool>((X >> k) & 1U)) return false;
  }

  for (std::uint32_t i = 2; i <= layout.n; ++i) {
    const std::uint64_t period = std::uint64_t{1} << (i + 1);
    if (X % period == period - 1 && state[layout.carry(i)]) return false;
  }
  return true;
}

} // namespace spikecount::verification
