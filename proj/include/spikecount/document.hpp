#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spikecount/network.hpp"

namespace spikecount {

inline constexpr int kDocumentVersion = 1;

/// Decoding metadata stored next to a network: which construction it came
/// from and which neurons carry the answer.
struct LayoutInfo {
  std::string kind;
  std::uint64_t T = 0;
  std::uint32_t n = 0;
  std::vector<std::string> output_labels;

  friend bool operator==(const LayoutInfo &, const LayoutInfo &) = default;
};

struct NetworkDocument {
  Network network;
  std::optional<LayoutInfo> layout;
};

enum class ParseMode { strict, lenient };

/// {"version":1,"neurons":[{id,label,role,bias}],"synapses":[{src,dst,weight}],"layout":{...}}
/// Bias and weight are exact decimal strings.
std::string serialize(const Network &net, const std::optional<LayoutInfo> &layout = std::nullopt);

/// Throws ParseError on malformed input. In strict mode unknown fields are
/// rejected; lenient mode ignores them.
NetworkDocument deserialize(std::string_view text, ParseMode mode = ParseMode::strict);

} // namespace spikecount
