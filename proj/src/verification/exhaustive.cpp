#include "spikecount/verification/exhaustive.hpp"

#include <functional>

#include "spikecount/errors.hpp"
#include "spikecount/verification/oracles.hpp"

namespace spikecount::verification {
namespace {

using Decoder = std::function<std::optional<std::uint64_t>(const FiringState &)>;
using Oracle = std::uint64_t (*)(const std::vector<bool> &);
using SettlePoint = std::size_t (*)(const std::vector<bool> &);

void check_preconditions(std::uint64_t T, std::size_t settle, std::uint64_t bound) {
  if (T < 1) throw std::invalid_argument("T must be at least 1");
  if (settle < 1) throw std::invalid_argument("settle must be at least 1");
  if (T > bound) {
    throw BoundExceeded("T=" + std::to_string(T) + " exceeds the exhaustive bound of " + std::to_string(bound) +
                        " (2^T inputs); pass a larger bound explicitly if the run time is acceptable");
  }
}

// Bit 0 of the string is the most significant bit of the mask, so increasing
// masks enumerate inputs in lexicographic order.
std::vector<bool> unpack(std::uint64_t mask, std::uint64_t T) {
  std::vector<bool> bits(T);
  for (std::uint64_t t = 0; t < T; ++t) bits[t] = (mask >> (T - 1 - t)) & 1U;
  return bits;
}

VerificationReport sweep(std::string_view kind, const Network &net, const Decoder &decode, Oracle oracle,
                         SettlePoint settle_point, std::uint64_t T, std::size_t settle, std::uint64_t bound) {
  check_preconditions(T, settle, bound);

  CheckResult time_one{std::string(kind) + ".time-one (T=" + std::to_string(T) + ")"};
  CheckResult early{std::string(kind) + ".early-convergence (T=" + std::to_string(T) + ")"};
  const std::size_t horizon = T + 1 + settle;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << T); ++mask) {
    InputSequence input(unpack(mask, T), T);
    const auto expected = static_cast<std::int64_t>(oracle(input.bits()));
    const std::size_t converged = settle_point(input.bits());
    Trace trace = run(net, input, horizon);

    auto observe = [&](std::size_t t) -> std::optional<Counterexample> {
      std::optional<std::uint64_t> value = decode(trace[t]);
      std::int64_t observed = value ? static_cast<std::int64_t>(*value) : -1;
      if (observed == expected) return std::nullopt;
      return Counterexample{input, t, value ? "decoded" : "decoded (unclean)", expected, observed};
    };

    ++time_one.cases;
    for (std::size_t t = T + 1; t <= horizon; ++t) {
      if (auto ce = observe(t)) {
        time_one.fail(std::move(*ce));
        break;
      }
    }
    ++early.cases;
    for (std::size_t t = converged; t <= horizon; ++t) {
      if (auto ce = observe(t)) {
        early.fail(std::move(*ce));
        break;
      }
    }
  }

  VerificationReport report;
  report.add(std::move(time_one));
  report.add(std::move(early));
  return report;
}

// The capture layer latches one step after the first 0 following the run.
std::size_t capture_settle_time(const std::vector<bool> &bits) {
  const std::size_t end = first_run_end(bits);
  return end == 0 ? 0 : end + 1;
}

} // namespace

std::string_view to_string(ProblemKind kind) { return kind == ProblemKind::fcsc ? "fcsc" : "tsc"; }

std::optional<ProblemKind> parse_problem(std::string_view text) {
  if (text == "fcsc") return ProblemKind::fcsc;
  if (text == "tsc") return ProblemKind::tsc;
  return std::nullopt;
}

VerificationReport exhaustive_verify(ProblemKind kind, std::uint64_t T, std::size_t settle, std::uint64_t bound) {
  check_preconditions(T, settle, bound);
  if (kind == ProblemKind::fcsc) return exhaustive_verify(constructions::build_fcsc(T), T, settle, bound);
  return exhaustive_verify(constructions::build_tsc(T), T, settle, bound);
}

VerificationReport exhaustive_verify(const constructions::FcscNetwork &fcsc, std::uint64_t T, std::size_t settle,
                                     std::uint64_t bound) {
  const auto &layout = fcsc.layout;
  Decoder decode = [&layout](const FiringState &s) -> std::optional<std::uint64_t> {
    return constructions::decode_fcsc(s, layout);
  };
  return sweep("fcsc", fcsc.network, decode, oracle_first_run_length, capture_settle_time, T, settle, bound);
}

VerificationReport exhaustive_verify(const constructions::TscNetwork &tsc, std::uint64_t T, std::size_t settle,
                                     std::uint64_t bound) {
  const auto &layout = tsc.layout;
  Decoder decode = [&layout](const FiringState &s) -> std::optional<std::uint64_t> {
    try {
      return constructions::decode_tsc(s, layout);
    } catch (const NotCleanStateError &) {
      return std::nullopt;
    }
  };
  return sweep("tsc", tsc.network, decode, oracle_total_spikes, last_run_settle_time, T, settle, bound);
}

} // namespace spikecount::verification
