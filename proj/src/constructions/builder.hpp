#pragma once

#include <string>
#include <vector>

#include "spikecount/network.hpp"

namespace spikecount::constructions::detail {

// Accumulates neurons and synapses in id order.
class Builder {
public:
  NeuronId add(std::string label, Role role, Rational bias) {
    NeuronId id{static_cast<std::uint32_t>(neurons_.size())};
    neurons_.push_back({id, bias, role, std::move(label)});
    return id;
  }

  void connect(NeuronId src, NeuronId dst, Rational weight) { synapses_.push_back({src, dst, weight}); }

  Network finish() && { return Network(std::move(neurons_), std::move(synapses_)); }

private:
  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
};

inline Rational decimal(std::int64_t tenths) { return Rational(tenths, 10); }

inline std::vector<std::string> labels_of(const Network &net, const std::vector<NeuronId> &ids) {
  std::vector<std::string> out;
  for (NeuronId id : ids) out.push_back(net.neuron(id).label);
  return out;
}

} // namespace spikecount::constructions::detail
