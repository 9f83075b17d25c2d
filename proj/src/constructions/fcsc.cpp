#include "spikecount/constructions.hpp"

#include <bit>
#include <stdexcept>

#include "builder.hpp"

namespace spikecount::constructions {
namespace {

using detail::Builder;
using detail::decimal;

struct CounterIds {
  std::vector<NeuronId> z;
  std::vector<NeuronId> in;
};

CounterIds add_counter(Builder &b, NeuronId x, std::uint32_t n, Role digit_role) {
  CounterIds ids;
  for (std::uint32_t i = 0; i <= n; ++i) {
    ids.z.push_back(b.add("z" + std::to_string(i), digit_role, i == 0 ? decimal(5) : Rational(2 * i) + decimal(5)));
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    ids.in.push_back(b.add("in" + std::to_string(i), Role::hidden, Rational(i) - decimal(5)));
  }

  // mod-2 base
  b.connect(x, ids.z[0], 1);
  b.connect(ids.z[0], ids.z[0], -1);

  for (std::uint32_t i = 1; i <= n; ++i) {
    const NeuronId zi = ids.z[i];
    const NeuronId ini = ids.in[i - 1];
    const auto w = static_cast<std::int64_t>(i);
    b.connect(x, zi, w + 1);
    for (std::uint32_t j = 0; j < i; ++j) b.connect(ids.z[j], zi, 1);
    for (std::uint32_t k = 1; k <= i; ++k) b.connect(ids.z[k], ini, 1);
    b.connect(ini, zi, -(w + 1));
    b.connect(zi, zi, w);
  }
  return ids;
}

} // namespace

std::uint32_t digits_for_horizon(std::uint64_t T) {
  return static_cast<std::uint32_t>(std::bit_width(T));
}

Network build_mod2_base() {
  Builder b;
  NeuronId x = b.add("x", Role::input, 0);
  NeuronId z0 = b.add("z0", Role::output, decimal(5));
  b.connect(x, z0, 1);
  b.connect(z0, z0, -1);
  return std::move(b).finish();
}

Network build_fcsc_counter(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("counter needs n >= 1");
  Builder b;
  NeuronId x = b.add("x", Role::input, 0);
  add_counter(b, x, n, Role::output);
  return std::move(b).finish();
}

FcscNetwork build_fcsc(std::uint64_t T) {
  if (T < 1) throw std::invalid_argument("FCSC needs T >= 1");
  const std::uint32_t n = digits_for_horizon(T);
  const auto span = static_cast<std::int64_t>(n);

  Builder b;
  FcscLayout layout;
  layout.n = n;
  layout.x = b.add("x", Role::input, 0);
  CounterIds counter = add_counter(b, layout.x, n, Role::hidden);
  layout.z = counter.z;
  layout.in = counter.in;
  for (std::uint32_t i = 0; i <= n; ++i) {
    // The capture firing rule needs b_y strictly below 0.5: a captured y that
    // sees x, s and no z sits at potential exactly 0.5.
    layout.y.push_back(b.add("y" + std::to_string(i), Role::output, decimal(1)));
  }
  layout.s = b.add("s", Role::hidden, decimal(5));

  for (std::uint32_t i = 0; i <= n; ++i) {
    const NeuronId yi = layout.y[i];
    b.connect(layout.x, yi, -2);
    b.connect(yi, yi, 4);
    b.connect(layout.z[i], yi, 1);
    b.connect(layout.s, yi, decimal(-15));
    b.connect(layout.z[i], layout.s, 1);
    b.connect(yi, layout.s, 1);
  }
  b.connect(layout.x, layout.s, -(span + 1));
  b.connect(layout.s, layout.s, span + 2);

  return {std::move(b).finish(), std::move(layout)};
}

FcscLayout FcscLayout::from_network(const Network &net, std::uint32_t n) {
  FcscLayout layout;
  layout.n = n;
  layout.x = net.id_of("x");
  for (std::uint32_t i = 0; i <= n; ++i) {
    layout.z.push_back(net.id_of("z" + std::to_string(i)));
    layout.y.push_back(net.id_of("y" + std::to_string(i)));
    if (i >= 1) layout.in.push_back(net.id_of("in" + std::to_string(i)));
  }
  layout.s = net.id_of("s");
  return layout;
}

std::uint64_t decode_fcsc(const FiringState &state, const FcscLayout &layout) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < layout.y.size(); ++i) {
    if (state[layout.y[i]]) value |= std::uint64_t{1} << i;
  }
  return value;
}

LayoutInfo layout_info(const FcscNetwork &fcsc, std::uint64_t T) {
  return {"fcsc", T, fcsc.layout.n, detail::labels_of(fcsc.network, fcsc.layout.y)};
}

} // namespace spikecount::constructions
