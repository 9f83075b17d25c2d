#pragma once

#include <string>

#include "spikecount/network.hpp"

namespace spikecount::cli {

/// Graphviz digraph. Nodes in id order labelled "name(bias)", edges sorted by
/// (src, dst) and labelled with the weight, so equal networks give equal bytes.
std::string to_dot(const Network &net);

} // namespace spikecount::cli
