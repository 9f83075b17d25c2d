#include "spikecount/constructions.hpp"

#include <stdexcept>

#include "builder.hpp"

namespace spikecount::constructions {

UnaryNetwork build_unary_time0_counter(std::uint64_t T) {
  if (T < 1) throw std::invalid_argument("unary counter needs T >= 1");
  detail::Builder b;
  NeuronId x = b.add("x", Role::input, 0);
  std::vector<NeuronId> chain;
  for (std::uint64_t i = 1; i <= T; ++i) {
    chain.push_back(b.add("c" + std::to_string(i), Role::output, i == 1 ? detail::decimal(5) : detail::decimal(15)));
  }
  // c1 latches on any spike; c_i latches when x fires while c_{i-1} is on.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    b.connect(x, chain[i], 1);
    if (i > 0) b.connect(chain[i - 1], chain[i], 1);
    b.connect(chain[i], chain[i], 2);
  }
  return {std::move(b).finish(), std::move(chain)};
}

std::uint64_t decode_unary(const FiringState &state, const std::vector<NeuronId> &chain) {
  std::uint64_t count = 0;
  while (count < chain.size() && state[chain[count]]) ++count;
  return count;
}

LayoutInfo layout_info(const UnaryNetwork &unary, std::uint64_t T) {
  return {"unary", T, 0, detail::labels_of(unary.network, unary.chain)};
}

} // namespace spikecount::constructions
