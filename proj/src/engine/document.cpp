#include "spikecount/document.hpp"

#include <initializer_list>
#include <set>

#include <json.hpp>

#include "spikecount/errors.hpp"

namespace spikecount {
namespace {

using Json = nlohmann::ordered_json;

void check_fields(const Json &obj, std::initializer_list<const char *> allowed, const char *where, ParseMode mode) {
  if (!obj.is_object()) {
    throw ParseError(std::string(where) + " must be an object");
  }
  if (mode == ParseMode::lenient) return;
  std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto &item : obj.items()) {
    if (!known.count(item.key())) {
      throw ParseError("unknown field '" + item.key() + "' in " + where);
    }
  }
}

const Json &field(const Json &obj, const char *name, const char *where) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + name + "' in " + where);
  }
  return *it;
}

std::uint32_t id_field(const Json &obj, const char *name, const char *where) {
  const Json &v = field(obj, name, where);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > UINT32_MAX) {
    throw ParseError(std::string("field '") + name + "' in " + where + " must be a nonnegative integer");
  }
  return v.get<std::uint32_t>();
}

std::string string_field(const Json &obj, const char *name, const char *where) {
  const Json &v = field(obj, name, where);
  if (!v.is_string()) {
    throw ParseError(std::string("field '") + name + "' in " + where + " must be a string");
  }
  return v.get<std::string>();
}

Rational rational_field(const Json &obj, const char *name, const char *where) {
  // Numbers are refused: binary floating point cannot carry the exact value.
  return parse_rational(string_field(obj, name, where));
}

} // namespace

std::string serialize(const Network &net, const std::optional<LayoutInfo> &layout) {
  Json doc;
  doc["version"] = kDocumentVersion;
  Json neurons = Json::array();
  for (const auto &n : net.neurons()) {
    neurons.push_back({{"id", n.id.value},
                       {"label", n.label},
                       {"role", std::string(to_string(n.role))},
                       {"bias", format_rational(n.bias)}});
  }
  doc["neurons"] = std::move(neurons);
  Json synapses = Json::array();
  for (const auto &s : net.synapses()) {
    synapses.push_back({{"src", s.src.value}, {"dst", s.dst.value}, {"weight", format_rational(s.weight)}});
  }
  doc["synapses"] = std::move(synapses);
  if (layout) {
    doc["layout"] = {{"kind", layout->kind},
                     {"T", layout->T},
                     {"n", layout->n},
                     {"output_labels", layout->output_labels}};
  }
  return doc.dump(2) + "\n";
}

NetworkDocument deserialize(std::string_view text, ParseMode mode) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  check_fields(doc, {"version", "neurons", "synapses", "layout"}, "document", mode);

  const Json &version = field(doc, "version", "document");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    throw ParseError("unsupported document version " + version.dump());
  }

  const Json &neuron_list = field(doc, "neurons", "document");
  const Json &synapse_list = field(doc, "synapses", "document");
  if (!neuron_list.is_array() || !synapse_list.is_array()) {
    throw ParseError("'neurons' and 'synapses' must be arrays");
  }

  std::vector<Neuron> neurons;
  for (const auto &item : neuron_list) {
    check_fields(item, {"id", "label", "role", "bias"}, "neuron", mode);
    Neuron n;
    n.id = NeuronId{id_field(item, "id", "neuron")};
    n.label = string_field(item, "label", "neuron");
    std::string role = string_field(item, "role", "neuron");
    auto parsed = parse_role(role);
    if (!parsed) throw ParseError("unknown role '" + role + "'");
    n.role = *parsed;
    n.bias = rational_field(item, "bias", "neuron");
    neurons.push_back(std::move(n));
  }

  std::vector<Synapse> synapses;
  for (const auto &item : synapse_list) {
    check_fields(item, {"src", "dst", "weight"}, "synapse", mode);
    synapses.push_back({NeuronId{id_field(item, "src", "synapse")}, NeuronId{id_field(item, "dst", "synapse")},
                        rational_field(item, "weight", "synapse")});
  }

  NetworkDocument out{Network(std::move(neurons), std::move(synapses)), std::nullopt};
  if (auto it = doc.find("layout"); it != doc.end()) {
    const Json &l = *it;
    check_fields(l, {"kind", "T", "n", "output_labels"}, "layout", mode);
    LayoutInfo layout;
    layout.kind = string_field(l, "kind", "layout");
    layout.T = id_field(l, "T", "layout");
    layout.n = id_field(l, "n", "layout");
    const Json &labels = field(l, "output_labels", "layout");
    if (!labels.is_array()) throw ParseError("'output_labels' must be an array");
    for (const auto &label : labels) {
      if (!label.is_string()) throw ParseError("output labels must be strings");
      layout.output_labels.push_back(label.get<std::string>());
    }
    out.layout = std::move(layout);
  }
  return out;
}

} // namespace spikecount
