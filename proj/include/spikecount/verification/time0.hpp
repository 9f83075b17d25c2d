#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spikecount/network.hpp"
#include "spikecount/simulator.hpp"
#include "spikecount/verification/report.hpp"

namespace spikecount::verification {

/// Output firing sets S_0..S_T along the all-ones input.
struct ChainCertificate {
  std::vector<std::vector<std::string>> sets;
  bool strict = false;
  std::size_t output_count = 0;

  /// A strict chain of T inclusions starting from S_0 forces |S_T| >= T, so
  /// any network producing it has at least T output neurons.
  std::uint64_t implied_min_outputs() const { return strict ? sets.size() - 1 : 0; }
};

/// The first time t in 1..T at which the decoded output is not t.
struct NotTime0Solver {
  std::size_t time = 0;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> observed;
};

using Time0Result = std::variant<ChainCertificate, NotTime0Solver>;

/// nullopt when the state does not decode (e.g. a two-hot mod-4 block).
using OutputDecoder = std::function<std::optional<std::uint64_t>(const FiringState &)>;

/// Runs the all-ones input of length T. If the decoded output equals the
/// running spike count at every t in 1..T, extracts S_0..S_T over `outputs`
/// and reports whether the chain is strictly increasing.
Time0Result time0_chain_certificate(const Network &net, const std::vector<std::string> &outputs,
                                    const OutputDecoder &decoder, std::uint64_t T);

/// FCSC(T) and TSC(T) must be rejected as time-0 solvers; the unary chain
/// with T neurons must yield a strict chain implying at least T outputs.
VerificationReport verify_time0(std::uint64_t T);

} // namespace spikecount::verification
