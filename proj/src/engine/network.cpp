#include "spikecount/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "spikecount/errors.hpp"

namespace spikecount {
namespace {

std::string describe(const Synapse &s) {
  return std::to_string(s.src.value) + "->" + std::to_string(s.dst.value);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw StructuralError("weights too large to simulate exactly");
  }
  return out;
}

std::int64_t scaled(const Rational &value, std::int64_t scale) {
  return checked_mul(value.numerator(), scale / value.denominator());
}

} // namespace

std::string_view to_string(Role role) {
  switch (role) {
  case Role::input:
    return "input";
  case Role::output:
    return "output";
  case Role::hidden:
    return "hidden";
  }
  return "hidden";
}

std::optional<Role> parse_role(std::string_view text) {
  if (text == "input") return Role::input;
  if (text == "output") return Role::output;
  if (text == "hidden") return Role::hidden;
  return std::nullopt;
}

Network::Network(std::vector<Neuron> neurons, std::vector<Synapse> synapses)
    : neurons_(std::move(neurons)), synapses_(std::move(synapses)) {
  ValidationReport report = validate_network(*this);
  // Duplicate labels and an input with incoming synapses are reported but do
  // not prevent simulation; the input's value is always supplied externally.
  for (const auto &issue : report.issues) {
    using K = ValidationIssue::Kind;
    if (issue.kind == K::duplicate_label || issue.kind == K::input_has_incoming) continue;
    kernel_error_ = issue.message;
    return;
  }

  std::int64_t scale = 1;
  auto absorb = [&scale](const Rational &r) {
    std::int64_t den = r.denominator();
    scale = checked_mul(scale / std::gcd(scale, den), den);
  };
  for (const auto &n : neurons_) absorb(n.bias);
  for (const auto &s : synapses_) absorb(s.weight);

  Kernel kernel;
  kernel.incoming.resize(neurons_.size());
  kernel.bias.reserve(neurons_.size());
  for (const auto &n : neurons_) {
    kernel.bias.push_back(scaled(n.bias, scale));
    if (n.role == Role::input) kernel.input = n.id.value;
  }
  for (const auto &s : synapses_) {
    kernel.incoming[s.dst.value].push_back({s.src.value, scaled(s.weight, scale)});
  }
  kernel_ = std::move(kernel);
}

const Neuron &Network::neuron(NeuronId id) const {
  if (id.value >= neurons_.size()) {
    throw StructuralError("unknown neuron id " + std::to_string(id.value));
  }
  return neurons_[id.value];
}

std::optional<NeuronId> Network::find(std::string_view label) const {
  for (const auto &n : neurons_) {
    if (n.label == label) return n.id;
  }
  return std::nullopt;
}

NeuronId Network::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw StructuralError("no neuron labelled '" + std::string(label) + "'");
}

std::optional<NeuronId> Network::input() const {
  for (const auto &n : neurons_) {
    if (n.role == Role::input) return n.id;
  }
  return std::nullopt;
}

std::vector<NeuronId> Network::outputs() const {
  std::vector<NeuronId> out;
  for (const auto &n : neurons_) {
    if (n.role == Role::output) out.push_back(n.id);
  }
  return out;
}

std::vector<NeuronId> Network::presynaptic(NeuronId id) const {
  std::vector<NeuronId> out;
  for (const auto &s : synapses_) {
    if (s.dst == id) out.push_back(s.src);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Rational> Network::weight(NeuronId src, NeuronId dst) const {
  for (const auto &s : synapses_) {
    if (s.src == src && s.dst == dst) return s.weight;
  }
  return std::nullopt;
}

const Network::Kernel &Network::kernel() const {
  if (!kernel_) {
    throw StructuralError("network cannot be simulated: " + kernel_error_);
  }
  return *kernel_;
}

std::size_t computing_neuron_count(const Network &net) {
  return static_cast<std::size_t>(std::count_if(net.neurons().begin(), net.neurons().end(),
                                                [](const Neuron &n) { return n.role != Role::input; }));
}

Network with_weight(const Network &net, std::string_view src, std::string_view dst, Rational weight) {
  NeuronId from = net.id_of(src);
  NeuronId to = net.id_of(dst);
  std::vector<Synapse> synapses = net.synapses();
  auto it = std::find_if(synapses.begin(), synapses.end(),
                         [&](const Synapse &s) { return s.src == from && s.dst == to; });
  if (it == synapses.end()) {
    synapses.push_back({from, to, weight});
  } else {
    it->weight = weight;
  }
  return Network(net.neurons(), std::move(synapses));
}

Network with_bias(const Network &net, std::string_view label, Rational bias) {
  std::vector<Neuron> neurons = net.neurons();
  neurons[net.id_of(label).value].bias = bias;
  return Network(std::move(neurons), net.synapses());
}

bool ValidationReport::has(ValidationIssue::Kind kind) const {
  return std::any_of(issues.begin(), issues.end(), [kind](const auto &i) { return i.kind == kind; });
}

ValidationReport validate_network(const Network &net) {
  using K = ValidationIssue::Kind;
  ValidationReport report;
  const auto &neurons = net.neurons();

  std::set<std::string> labels;
  std::size_t inputs = 0;
  for (std::size_t i = 0; i < neurons.size(); ++i) {
    const Neuron &n = neurons[i];
    if (n.id.value != i) {
      report.issues.push_back({K::id_mismatch, "neuron at position " + std::to_string(i) + " has id " +
                                                   std::to_string(n.id.value) + " (ids must be dense)"});
    }
    if (!labels.insert(n.label).second) {
      report.issues.push_back({K::duplicate_label, "duplicate label '" + n.label + "'"});
    }
    if (n.role == Role::input) ++inputs;
  }
  if (inputs == 0) {
    report.issues.push_back({K::missing_input, "missing input neuron"});
  } else if (inputs > 1) {
    report.issues.push_back({K::multiple_inputs, "multiple inputs (" + std::to_string(inputs) + ")"});
  }

  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto &s : net.synapses()) {
    bool src_ok = s.src.value < neurons.size();
    bool dst_ok = s.dst.value < neurons.size();
    if (!src_ok || !dst_ok) {
      report.issues.push_back({K::dangling_endpoint, "dangling endpoint in synapse " + describe(s)});
      continue;
    }
    if (!seen.insert({s.src.value, s.dst.value}).second) {
      report.issues.push_back({K::duplicate_synapse, "duplicate synapse " + describe(s)});
    }
    if (neurons[s.dst.value].role == Role::input) {
      report.issues.push_back({K::input_has_incoming, "input neuron has incoming synapse " + describe(s)});
    }
  }
  return report;
}

} // namespace spikecount
