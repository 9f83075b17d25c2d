#include "spikecount/simulator.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "spikecount/errors.hpp"

namespace spikecount {

std::vector<NeuronId> FiringState::fired() const {
  std::vector<NeuronId> out;
  for (std::size_t i = 0; i < fired_.size(); ++i) {
    if (fired_[i]) out.push_back(NeuronId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

InputSequence::InputSequence(std::vector<bool> bits, std::size_t horizon_T)
    : bits_(std::move(bits)), horizon_(horizon_T) {
  if (bits_.size() > horizon_) {
    throw std::invalid_argument("input of length " + std::to_string(bits_.size()) + " exceeds horizon T=" +
                                std::to_string(horizon_));
  }
}

InputSequence::InputSequence(std::vector<bool> bits) : InputSequence(bits, bits.size()) {}

InputSequence InputSequence::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("invalid bit '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    bits.push_back(c == '1');
  }
  return InputSequence(std::move(bits));
}

std::string InputSequence::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

FiringState initial_state(const Network &net, bool input_bit) {
  const auto &kernel = net.kernel();
  FiringState state(net.size(), 0);
  state.set(NeuronId{kernel.input}, input_bit);
  return state;
}

FiringState step(const Network &net, const FiringState &prev, bool input_bit) {
  const auto &kernel = net.kernel();
  if (prev.size() != net.size()) {
    throw StructuralError("firing state covers " + std::to_string(prev.size()) + " neurons, network has " +
                          std::to_string(net.size()));
  }
  const auto &fired = prev.bits();
  FiringState next(net.size(), prev.time() + 1);
  for (std::uint32_t z = 0; z < net.size(); ++z) {
    if (z == kernel.input) {
      next.set(NeuronId{z}, input_bit);
      continue;
    }
    std::int64_t potential = 0;
    for (const auto &edge : kernel.incoming[z]) {
      if (fired[edge.src]) potential += edge.weight;
    }
    next.set(NeuronId{z}, potential > kernel.bias[z]);
  }
  return next;
}

Trace run(const Network &net, const InputSequence &input, std::size_t horizon) {
  if (horizon < input.size()) {
    throw std::invalid_argument("horizon " + std::to_string(horizon) + " is shorter than the input (" +
                                std::to_string(input.size()) + ")");
  }
  Trace trace;
  trace.reserve(horizon + 1);
  trace.push_back(initial_state(net, input.at(0)));
  for (std::size_t t = 1; t <= horizon; ++t) {
    trace.push_back(step(net, trace.back(), input.at(t)));
  }
  return trace;
}

Trace run_from(const Network &net, FiringState start, const std::vector<bool> &later_inputs) {
  Trace trace;
  trace.reserve(later_inputs.size() + 1);
  trace.push_back(std::move(start));
  for (bool bit : later_inputs) {
    trace.push_back(step(net, trace.back(), bit));
  }
  return trace;
}

void write_trace(std::ostream &out, const Network &net, const Trace &trace) {
  for (const auto &state : trace) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (NeuronId id : state.fired()) labels.push_back(net.neuron(id).label);
    out << nlohmann::ordered_json{{"t", state.time()}, {"fired", std::move(labels)}}.dump() << '\n';
  }
}

} // namespace spikecount
