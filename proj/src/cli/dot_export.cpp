#include "spikecount/cli/dot_export.hpp"

#include <algorithm>
#include <sstream>

namespace spikecount::cli {
namespace {

std::string quoted(const std::string &text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string_view shape(Role role) {
  switch (role) {
  case Role::input:
    return "box";
  case Role::output:
    return "doublecircle";
  case Role::hidden:
    return "circle";
  }
  return "circle";
}

} // namespace

std::string to_dot(const Network &net) {
  std::ostringstream out;
  out << "digraph network {\n  rankdir=LR;\n";
  for (const auto &n : net.neurons()) {
    out << "  n" << n.id.value << " [label=" << quoted(n.label + "(" + format_rational(n.bias) + ")")
        << ", shape=" << shape(n.role) << "];\n";
  }
  std::vector<Synapse> edges = net.synapses();
  std::sort(edges.begin(), edges.end(), [](const Synapse &a, const Synapse &b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  for (const auto &e : edges) {
    out << "  n" << e.src.value << " -> n" << e.dst.value << " [label=" << quoted(format_rational(e.weight))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace spikecount::cli
