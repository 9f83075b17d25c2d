#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spikecount/document.hpp"
#include "spikecount/network.hpp"
#include "spikecount/simulator.hpp"

namespace spikecount::constructions {

/// Number of binary digits needed so that every count in 0..T fits: ceil(log2(T+1)).
std::uint32_t digits_for_horizon(std::uint64_t T);

// ---------------------------------------------------------------------------
// First-consecutive-spikes counting

/// x -> z0 with weight 1, self-inhibition -1, bias 0.5. z0 toggles while x fires.
Network build_mod2_base();

/// Binary counter over z0..zn with carry neurons in1..inn. While the input
/// keeps firing, z_i holds bit i of the elapsed time.
Network build_fcsc_counter(std::uint32_t n);

/// Neuron ids of an FCSC network. The counter digits z and capture outputs y
/// are indexed 0..n; carries are stored as in[i-1] for in_i, i = 1..n.
struct FcscLayout {
  std::uint32_t n = 0;
  NeuronId x;
  std::vector<NeuronId> z;
  std::vector<NeuronId> in;
  std::vector<NeuronId> y;
  NeuronId s;

  NeuronId carry(std::uint32_t i) const { return in.at(i - 1); }
  static FcscLayout from_network(const Network &net, std::uint32_t n);
};

struct FcscNetwork {
  Network network;
  FcscLayout layout;
};

/// Counter stage composed with the capture stage; the capture stage reads the
/// counter's z neurons directly. Outputs are y0..yn with n = digits_for_horizon(T).
FcscNetwork build_fcsc(std::uint64_t T);

/// Sum of y_i * 2^i.
std::uint64_t decode_fcsc(const FiringState &state, const FcscLayout &layout);

// ---------------------------------------------------------------------------
// Total spikes counting

/// Four-neuron mod-4 counter f0..f3 driven by x.
Network build_mod4();

/// Ids of a TSC network: f0..f3, then digits z2..zn and carries in2..inn
/// stored from index 0 (use digit()/carry() with the digit index k >= 2).
struct TscLayout {
  std::uint32_t n = 0;
  NeuronId x;
  std::array<NeuronId, 4> f;
  std::vector<NeuronId> z;
  std::vector<NeuronId> in;

  NeuronId digit(std::uint32_t k) const { return z.at(k - 2); }
  NeuronId carry(std::uint32_t k) const { return in.at(k - 2); }
  std::vector<NeuronId> outputs() const;
  static TscLayout from_network(const Network &net, std::uint32_t n);
};

struct TscNetwork {
  Network network;
  TscLayout layout;
};

/// Mod-4 counter plus digits z2..zn, n = digits_for_horizon(T). For T = 1
/// there are no higher digits and the network is the mod-4 counter alone.
TscNetwork build_tsc(std::uint64_t T);

/// sum_{k>=2} z_k * 2^k plus the index of the hot f neuron. An all-zero f
/// block reads as residue 0. Throws NotCleanStateError if two or more f fire.
std::uint64_t decode_tsc(const FiringState &state, const TscLayout &layout);

/// A clean TSC state storing `value`: f one-hot at value mod 4, z_k = bit k,
/// all carries quiet. The input neuron is set to `input_bit`.
/// Throws std::invalid_argument if value does not fit in the digits.
FiringState make_clean_state(const TscNetwork &tsc, std::uint64_t value, std::size_t time, bool input_bit);

// ---------------------------------------------------------------------------
// Unary chain c1..cT, a network that counts the all-ones input with no delay.

struct UnaryNetwork {
  Network network;
  std::vector<NeuronId> chain;
};

UnaryNetwork build_unary_time0_counter(std::uint64_t T);

/// Length of the prefix c1, c2, ... that fires.
std::uint64_t decode_unary(const FiringState &state, const std::vector<NeuronId> &chain);

// ---------------------------------------------------------------------------

LayoutInfo layout_info(const FcscNetwork &fcsc, std::uint64_t T);
LayoutInfo layout_info(const TscNetwork &tsc, std::uint64_t T);
LayoutInfo layout_info(const UnaryNetwork &unary, std::uint64_t T);

} // namespace spikecount::constructions
