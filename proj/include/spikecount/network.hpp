#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spikecount/rational.hpp"

namespace spikecount {

struct NeuronId {
  std::uint32_t value = 0;

  friend auto operator<=>(const NeuronId &, const NeuronId &) = default;
};

enum class Role { input, output, hidden };

std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view text);

struct Neuron {
  NeuronId id;
  Rational bias;
  Role role = Role::hidden;
  std::string label;

  friend bool operator==(const Neuron &, const Neuron &) = default;
};

struct Synapse {
  NeuronId src;
  NeuronId dst;
  Rational weight;

  friend bool operator==(const Synapse &, const Synapse &) = default;
};

/// Immutable weighted directed graph of strict-threshold neurons.
///
/// A network may be constructed from arbitrary data so that it can be
/// validated and reported on. Simulation additionally needs it to be
/// well-formed: dense ids, existing endpoints, and exactly one input neuron.
/// For such networks an integer kernel is precomputed at construction by
/// scaling every weight and bias with the common denominator, which keeps the
/// threshold comparison exact and cheap.
class Network {
public:
  Network() = default;
  Network(std::vector<Neuron> neurons, std::vector<Synapse> synapses);

  const std::vector<Neuron> &neurons() const { return neurons_; }
  const std::vector<Synapse> &synapses() const { return synapses_; }
  std::size_t size() const { return neurons_.size(); }

  const Neuron &neuron(NeuronId id) const;
  std::optional<NeuronId> find(std::string_view label) const;
  /// Like find, but throws StructuralError for an unknown label.
  NeuronId id_of(std::string_view label) const;

  std::optional<NeuronId> input() const;
  std::vector<NeuronId> outputs() const;
  /// Presynaptic neurons of `id`, ascending.
  std::vector<NeuronId> presynaptic(NeuronId id) const;
  std::optional<Rational> weight(NeuronId src, NeuronId dst) const;

  bool simulable() const { return kernel_.has_value(); }

  friend bool operator==(const Network &a, const Network &b) {
    return a.neurons_ == b.neurons_ && a.synapses_ == b.synapses_;
  }

  struct Kernel {
    struct Edge {
      std::uint32_t src;
      std::int64_t weight;
    };
    std::vector<std::vector<Edge>> incoming;
    std::vector<std::int64_t> bias;
    std::uint32_t input = 0;
  };

  /// Throws StructuralError when the network cannot be simulated.
  const Kernel &kernel() const;

private:
  std::vector<Neuron> neurons_;
  std::vector<Synapse> synapses_;
  std::optional<Kernel> kernel_;
  std::string kernel_error_;
};

/// Number of neurons excluding the externally driven input neuron.
std::size_t computing_neuron_count(const Network &net);

/// Copy of `net` with the synapse src->dst set to `weight` (added if absent).
Network with_weight(const Network &net, std::string_view src, std::string_view dst, Rational weight);
/// Copy of `net` with the bias of `label` replaced.
Network with_bias(const Network &net, std::string_view label, Rational bias);

struct ValidationIssue {
  enum class Kind {
    id_mismatch,
    duplicate_label,
    dangling_endpoint,
    duplicate_synapse,
    missing_input,
    multiple_inputs,
    input_has_incoming,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const { return issues.empty(); }
  bool has(ValidationIssue::Kind kind) const;
};

ValidationReport validate_network(const Network &net);

} // namespace spikecount
