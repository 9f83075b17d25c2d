#include "spikecount/constructions.hpp"

#include <stdexcept>

#include "builder.hpp"
#include "spikecount/errors.hpp"

namespace spikecount::constructions {
namespace {

using detail::Builder;
using detail::decimal;

std::array<NeuronId, 4> add_mod4(Builder &b, NeuronId x) {
  std::array<NeuronId, 4> f;
  for (std::uint32_t i = 0; i < 4; ++i) {
    f[i] = b.add("f" + std::to_string(i), Role::output, i == 1 ? decimal(5) : decimal(15));
  }
  for (std::uint32_t i = 0; i < 4; ++i) {
    b.connect(x, f[i], 1);
    b.connect(f[i], f[i], 2);
  }
  for (std::uint32_t j = 0; j < 3; ++j) b.connect(f[j + 1], f[j], -3);
  b.connect(f[1], f[2], 1);
  b.connect(f[2], f[3], 1);
  b.connect(f[3], f[0], 1);
  b.connect(f[0], f[3], -3);
  // From {f3, f0} a spike must still reach f1.
  b.connect(f[3], f[1], decimal(-7));
  b.connect(f[0], f[1], decimal(3));
  return f;
}

} // namespace

Network build_mod4() {
  Builder b;
  NeuronId x = b.add("x", Role::input, 0);
  add_mod4(b, x);
  return std::move(b).finish();
}

TscNetwork build_tsc(std::uint64_t T) {
  if (T < 1) throw std::invalid_argument("TSC needs T >= 1");
  const std::uint32_t n = digits_for_horizon(T);

  Builder b;
  TscLayout layout;
  layout.n = n;
  layout.x = b.add("x", Role::input, 0);
  layout.f = add_mod4(b, layout.x);
  for (std::uint32_t k = 2; k <= n; ++k) {
    layout.z.push_back(b.add("z" + std::to_string(k), Role::output, Rational(k) + decimal(15)));
  }
  for (std::uint32_t k = 2; k <= n; ++k) {
    layout.in.push_back(b.add("in" + std::to_string(k), Role::hidden, Rational(k) + decimal(25)));
  }

  const NeuronId f0 = layout.f[0];
  const NeuronId f3 = layout.f[3];
  for (std::uint32_t k = 2; k <= n; ++k) {
    const NeuronId zk = layout.digit(k);
    const NeuronId ink = layout.carry(k);
    const auto w = static_cast<std::int64_t>(k);
    for (NeuronId target : {zk, ink}) {
      b.connect(f3, target, 3);
      b.connect(f0, target, -1);
      b.connect(layout.x, target, 1);
      for (std::uint32_t j = 2; j < k; ++j) b.connect(layout.digit(j), target, 1);
    }
    b.connect(ink, zk, -(w + 3));
    b.connect(zk, ink, 1);
    b.connect(zk, zk, w + 3);
  }
  return {std::move(b).finish(), std::move(layout)};
}

std::vector<NeuronId> TscLayout::outputs() const {
  std::vector<NeuronId> out(f.begin(), f.end());
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

TscLayout TscLayout::from_network(const Network &net, std::uint32_t n) {
  TscLayout layout;
  layout.n = n;
  layout.x = net.id_of("x");
  for (std::uint32_t i = 0; i < 4; ++i) layout.f[i] = net.id_of("f" + std::to_string(i));
  for (std::uint32_t k = 2; k <= n; ++k) {
    layout.z.push_back(net.id_of("z" + std::to_string(k)));
    layout.in.push_back(net.id_of("in" + std::to_string(k)));
  }
  return layout;
}

std::uint64_t decode_tsc(const FiringState &state, const TscLayout &layout) {
  std::uint64_t residue = 0;
  int hot = 0;
  for (std::uint32_t i = 0; i < 4; ++i) {
    if (state[layout.f[i]]) {
      residue = i;
      ++hot;
    }
  }
  if (hot > 1) {
    throw NotCleanStateError("not a clean state: " + std::to_string(hot) + " mod-4 neurons fire");
  }
  std::uint64_t value = residue;
  for (std::uint32_t k = 2; k <= layout.n; ++k) {
    if (state[layout.digit(k)]) value |= std::uint64_t{1} << k;
  }
  return value;
}

FiringState make_clean_state(const TscNetwork &tsc, std::uint64_t value, std::size_t time, bool input_bit) {
  const TscLayout &layout = tsc.layout;
  if (value >= (std::uint64_t{1} << (layout.n + 1))) {
    throw std::invalid_argument("value " + std::to_string(value) + " does not fit in " +
                                std::to_string(layout.n + 1) + " digits");
  }
  FiringState state(tsc.network.size(), time);
  state.set(layout.x, input_bit);
  state.set(layout.f[value % 4], true);
  for (std::uint32_t k = 2; k <= layout.n; ++k) {
    state.set(layout.digit(k), (value >> k) & 1U);
  }
  return state;
}

LayoutInfo layout_info(const TscNetwork &tsc, std::uint64_t T) {
  return {"tsc", T, tsc.layout.n, detail::labels_of(tsc.network, tsc.layout.outputs())};
}

} // namespace spikecount::constructions
