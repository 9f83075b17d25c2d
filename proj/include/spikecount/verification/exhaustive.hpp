#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "spikecount/constructions.hpp"
#include "spikecount/verification/report.hpp"

namespace spikecount::verification {

enum class ProblemKind { fcsc, tsc };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem(std::string_view text);

inline constexpr std::uint64_t kDefaultExhaustiveBound = 12;

/// Thrown when an exhaustive sweep is requested beyond the configured bound.
class BoundExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Runs every input of length T (all 2^T of them, in lexicographic order)
/// and compares the decoded output with the oracle.
///
/// Two checks are reported:
///  - "<kind>.time-one": every t in [T+1, T+1+settle];
///  - "<kind>.early-convergence": every t from the convergence point up to
///    T+1+settle. The convergence point is one step after the first run ends
///    for FCSC (the capture layer latches then) and one step after the last
///    run ends for TSC; 0 without spikes.
/// The first counterexample is the earliest by input, then by time.
VerificationReport exhaustive_verify(ProblemKind kind, std::uint64_t T, std::size_t settle,
                                     std::uint64_t bound = kDefaultExhaustiveBound);

// Same sweep over a caller-supplied (for instance mutated) network.
VerificationReport exhaustive_verify(const constructions::FcscNetwork &fcsc, std::uint64_t T, std::size_t settle,
                                     std::uint64_t bound = kDefaultExhaustiveBound);
VerificationReport exhaustive_verify(const constructions::TscNetwork &tsc, std::uint64_t T, std::size_t settle,
                                     std::uint64_t bound = kDefaultExhaustiveBound);

} // namespace spikecount::verification
