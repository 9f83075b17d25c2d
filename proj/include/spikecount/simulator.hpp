#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spikecount/network.hpp"

namespace spikecount {

/// Which neurons fired at one time step.
class FiringState {
public:
  FiringState() = default;
  FiringState(std::size_t neuron_count, std::size_t time) : fired_(neuron_count, false), time_(time) {}

  bool operator[](NeuronId id) const { return fired_.at(id.value); }
  void set(NeuronId id, bool value) { fired_.at(id.value) = value; }

  std::size_t size() const { return fired_.size(); }
  std::size_t time() const { return time_; }
  const std::vector<bool> &bits() const { return fired_; }
  std::vector<NeuronId> fired() const;

  friend bool operator==(const FiringState &, const FiringState &) = default;

private:
  std::vector<bool> fired_;
  std::size_t time_ = 0;
};

/// Spike train of the single input neuron; zero at and after bits().size().
class InputSequence {
public:
  InputSequence() = default;
  /// Throws std::invalid_argument when bits is longer than horizon_T.
  InputSequence(std::vector<bool> bits, std::size_t horizon_T);
  explicit InputSequence(std::vector<bool> bits);

  /// Parses a 0/1 string; index 0 is the spike at time 0.
  /// Throws ParseError ("invalid bit") on any other character.
  static InputSequence parse(std::string_view text);

  bool at(std::size_t t) const { return t < bits_.size() && bits_[t]; }
  std::size_t size() const { return bits_.size(); }
  std::size_t horizon() const { return horizon_; }
  const std::vector<bool> &bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const InputSequence &, const InputSequence &) = default;

private:
  std::vector<bool> bits_;
  std::size_t horizon_ = 0;
};

using Trace = std::vector<FiringState>;

/// State at t = 0: only the input neuron may fire.
FiringState initial_state(const Network &net, bool input_bit);

/// One synchronous update. Every non-input neuron z fires iff
/// sum(w_yz * prev[y]) - b_z > 0; the input neuron takes `input_bit`.
FiringState step(const Network &net, const FiringState &prev, bool input_bit);

/// States for t = 0..horizon. Throws std::invalid_argument if horizon < input.size().
Trace run(const Network &net, const InputSequence &input, std::size_t horizon);

/// Continues from an arbitrary state; later_inputs[k] is the input bit at
/// start.time() + k + 1. The returned trace begins with `start`.
Trace run_from(const Network &net, FiringState start, const std::vector<bool> &later_inputs);

/// One JSON object per line: {"t":0,"fired":["x"]}.
void write_trace(std::ostream &out, const Network &net, const Trace &trace);

} // namespace spikecount
