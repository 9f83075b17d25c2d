#include "spikecount/verification/time0.hpp"

#include <algorithm>

#include "spikecount/constructions.hpp"
#include "spikecount/errors.hpp"

namespace spikecount::verification {

Time0Result time0_chain_certificate(const Network &net, const std::vector<std::string> &outputs,
                                    const OutputDecoder &decoder, std::uint64_t T) {
  if (T < 1) throw std::invalid_argument("T must be at least 1");
  std::vector<NeuronId> ids;
  for (const auto &label : outputs) ids.push_back(net.id_of(label));

  const Trace trace = run(net, InputSequence(std::vector<bool>(T, true)), T);
  for (std::size_t t = 1; t <= T; ++t) {
    std::optional<std::uint64_t> observed = decoder(trace[t]);
    if (observed != t) return NotTime0Solver{t, t, observed};
  }

  ChainCertificate cert;
  cert.output_count = ids.size();
  std::vector<std::vector<NeuronId>> fired_sets;
  for (std::size_t t = 0; t <= T; ++t) {
    std::vector<NeuronId> fired;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (trace[t][ids[k]]) {
        fired.push_back(ids[k]);
        labels.push_back(outputs[k]);
      }
    }
    std::sort(fired.begin(), fired.end());
    fired_sets.push_back(std::move(fired));
    cert.sets.push_back(std::move(labels));
  }
  cert.strict = true;
  for (std::size_t t = 1; t < fired_sets.size(); ++t) {
    const auto &smaller = fired_sets[t - 1];
    const auto &larger = fired_sets[t];
    const bool subset = std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end());
    cert.strict = cert.strict && subset && larger.size() > smaller.size();
  }
  return cert;
}

VerificationReport verify_time0(std::uint64_t T) {
  using namespace constructions;
  VerificationReport report;
  const std::string suffix = " (T=" + std::to_string(T) + ")";

  auto expect_rejected = [&](std::string name, const Time0Result &result) {
    CheckResult check{std::move(name) + suffix, "networks"};
    check.cases = 1;
    if (const auto *rejected = std::get_if<NotTime0Solver>(&result)) {
      check.first_failure = "decoded output at t=" + std::to_string(rejected->time) + " is " +
                            (rejected->observed ? std::to_string(*rejected->observed) : std::string("undecodable")) +
                            ", expected " + std::to_string(rejected->expected);
    } else {
      check.fail("network behaved as a time-0 solver on the all-ones input");
    }
    report.add(std::move(check));
  };

  const FcscNetwork fcsc = build_fcsc(T);
  expect_rejected("time0.fcsc-not-solver",
                  time0_chain_certificate(fcsc.network, layout_info(fcsc, T).output_labels,
                                          [&](const FiringState &s) -> std::optional<std::uint64_t> {
                                            return decode_fcsc(s, fcsc.layout);
                                          },
                                          T));

  const TscNetwork tsc = build_tsc(T);
  expect_rejected("time0.tsc-not-solver",
                  time0_chain_certificate(tsc.network, layout_info(tsc, T).output_labels,
                                          [&](const FiringState &s) -> std::optional<std::uint64_t> {
                                            try {
                                              return decode_tsc(s, tsc.layout);
                                            } catch (const NotCleanStateError &) {
                                              return std::nullopt;
                                            }
                                          },
                                          T));

  const UnaryNetwork unary = build_unary_time0_counter(T);
  CheckResult chain{"time0.unary-chain" + suffix, "networks"};
  chain.cases = 1;
  const Time0Result result = time0_chain_certificate(
      unary.network, layout_info(unary, T).output_labels,
      [&](const FiringState &s) -> std::optional<std::uint64_t> { return decode_unary(s, unary.chain); }, T);
  if (const auto *cert = std::get_if<ChainCertificate>(&result)) {
    if (!cert->strict) {
      chain.fail("chain of output sets is not strictly increasing");
    } else if (cert->output_count < cert->implied_min_outputs()) {
      chain.fail("strict chain over fewer outputs than it implies");
    } else {
      chain.first_failure = "strict chain of " + std::to_string(cert->sets.size()) + " sets implies >= " +
                            std::to_string(cert->implied_min_outputs()) + " outputs; network has " +
                            std::to_string(cert->output_count);
    }
  } else {
    chain.fail("unary fixture rejected as time-0 solver at t=" + std::to_string(std::get<NotTime0Solver>(result).time));
  }
  report.add(std::move(chain));
  return report;
}

} // namespace spikecount::verification
