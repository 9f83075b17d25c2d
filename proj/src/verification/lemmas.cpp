#include "spikecount/verification/lemmas.hpp"

#include <sstream>

#include "spikecount/constructions.hpp"
#include "spikecount/verification/clean_state.hpp"

namespace spikecount::verification {
namespace {

using namespace constructions;

InputSequence ones(std::size_t length) { return InputSequence(std::vector<bool>(length, true)); }

std::vector<bool> burst_then_quiet(std::size_t burst, std::size_t quiet) {
  std::vector<bool> bits(burst, true);
  bits.resize(burst + quiet, false);
  return bits;
}

std::string describe_start(std::string_view what, std::uint64_t value, std::size_t burst) {
  std::ostringstream out;
  out << what << "=" << value << " L=" << burst;
  return out.str();
}

std::uint64_t std_pow2(std::uint32_t k) { return std::uint64_t{1} << k; }

} // namespace

CheckResult check_mod2_lemma(std::size_t t_max) {
  CheckResult check{"mod2.parity (t<=" + std::to_string(t_max) + ")", "steps"};
  const Network net = build_mod2_base();
  const NeuronId z0 = net.id_of("z0");
  const InputSequence input = ones(t_max + 1);
  const Trace trace = run(net, input, t_max + 1);
  for (std::size_t t = 0; t <= t_max; ++t) {
    ++check.cases;
    const bool expected = t % 2 == 1;
    if (trace[t][z0] != expected) check.fail(Counterexample{input, t, "z0", expected, trace[t][z0]});
  }
  return check;
}

CheckResult check_binary_counter(std::uint32_t n, std::size_t t_max) {
  CheckResult check{"counter.binary (n=" + std::to_string(n) + ", t<=" + std::to_string(t_max) + ")", "steps"};
  const Network net = build_fcsc_counter(n);
  const InputSequence input = ones(t_max + 1);
  const Trace trace = run(net, input, t_max + 1);
  for (std::size_t t = 0; t <= t_max; ++t) {
    ++check.cases;
    for (std::uint32_t i = 0; i <= n; ++i) {
      const std::string z = "z" + std::to_string(i);
      const bool digit = (t >> i) & 1U;
      if (trace[t][net.id_of(z)] != digit) {
        check.fail(Counterexample{input, t, z, digit, trace[t][net.id_of(z)]});
        break;
      }
      if (i == 0) continue;
      const std::string in = "in" + std::to_string(i);
      const std::size_t phase = t % std_pow2(i + 1);
      const bool carry = t >= 1 && (phase == 0 || phase == std_pow2(i + 1) - 1);
      if (trace[t][net.id_of(in)] != carry) {
        check.fail(Counterexample{input, t, in, carry, trace[t][net.id_of(in)]});
        break;
      }
    }
  }
  return check;
}

CheckResult check_capture(std::uint32_t n, std::size_t input_length) {
  CheckResult check{"capture.persistence (n=" + std::to_string(n) + ", inputs of length " +
                    std::to_string(input_length) + ")"};
  const FcscNetwork fcsc = build_fcsc(std_pow2(n) - 1);
  const FcscLayout &layout = fcsc.layout;
  const std::size_t horizon = input_length + 4;
  std::vector<bool> patterns_seen(std_pow2(n + 1), false);

  for (std::uint64_t mask = 0; mask < std_pow2(static_cast<std::uint32_t>(input_length)); ++mask) {
    std::vector<bool> bits(input_length);
    for (std::size_t t = 0; t < input_length; ++t) bits[t] = (mask >> (input_length - 1 - t)) & 1U;
    const InputSequence input(bits);
    const Trace trace = run(fcsc.network, input, horizon);
    ++check.cases;

    std::optional<std::size_t> capture_time;
    for (std::size_t t = 0; t <= horizon && !capture_time; ++t) {
      if (trace[t][layout.x]) continue;
      for (NeuronId z : layout.z) {
        if (trace[t][z]) {
          capture_time = t;
          break;
        }
      }
    }

    bool failed = false;
    for (std::size_t t = 0; t <= horizon && !failed; ++t) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        const bool expected = capture_time && t > *capture_time && trace[*capture_time][layout.z[i]];
        if (trace[t][layout.y[i]] != expected) {
          check.fail(Counterexample{input, t, "y" + std::to_string(i), expected, trace[t][layout.y[i]]});
          failed = true;
          break;
        }
      }
    }
    if (capture_time) patterns_seen[decode_fcsc(trace[*capture_time + 1], layout)] = true;
  }

  std::size_t distinct = 0;
  for (bool seen : patterns_seen) distinct += seen ? 1 : 0;
  check.note = std::to_string(distinct) + " distinct z patterns captured";
  return check;
}

CheckResult check_mod4_lemma(std::size_t max_burst) {
  CheckResult check{"mod4.burst (L<=" + std::to_string(max_burst) + ")", "cases"};
  const Network net = build_mod4();
  std::array<NeuronId, 4> f;
  for (std::uint32_t i = 0; i < 4; ++i) f[i] = net.id_of("f" + std::to_string(i));
  const std::size_t quiet = 3;

  for (std::uint32_t start = 0; start < 4; ++start) {
    for (std::size_t burst = 1; burst <= max_burst; ++burst) {
      ++check.cases;
      FiringState clean(net.size(), 0);
      clean.set(net.id_of("x"), true);
      clean.set(f[start], true);
      // x is on at t' (inside `clean`) and for the next burst-1 steps.
      std::vector<bool> later = burst_then_quiet(burst - 1, quiet + 1);
      const Trace trace = run_from(net, clean, later);

      auto expect_hot = [&](std::size_t t, std::initializer_list<std::uint32_t> hot) {
        for (std::uint32_t i = 0; i < 4; ++i) {
          bool want = false;
          for (std::uint32_t h : hot) want = want || h == i;
          if (trace[t][f[i]] != want) {
            check.fail(describe_start("clean", start, burst) + " t'+" + std::to_string(t) + " f" +
                       std::to_string(i) + " expected=" + std::to_string(want));
            return false;
          }
        }
        return true;
      };

      bool ok = true;
      for (std::size_t t = 1; t <= burst && ok; ++t) {
        ok = expect_hot(t, {static_cast<std::uint32_t>((start + t) % 4), static_cast<std::uint32_t>((start + t - 1) % 4)});
      }
      for (std::size_t t = burst + 1; t < trace.size() && ok; ++t) {
        ok = expect_hot(t, {static_cast<std::uint32_t>((start + burst) % 4)});
      }
    }
  }
  return check;
}

CheckResult check_tsc_lemma(std::uint32_t n, std::uint64_t max_value, std::size_t max_burst) {
  CheckResult check{"tsc.resume (n=" + std::to_string(n) + ", X<=" + std::to_string(max_value) +
                        ", L<=" + std::to_string(max_burst) + ")",
                    "cases"};
  const TscNetwork tsc = build_tsc(std_pow2(n) - 1);
  const std::size_t quiet = 3;
  for (std::uint64_t value = 0; value <= max_value; ++value) {
    for (std::size_t burst = 1; burst <= max_burst; ++burst) {
      ++check.cases;
      const std::uint64_t target = value + burst;
      const Trace trace = run_from(tsc.network, make_clean_state(tsc, value, 0, true), burst_then_quiet(burst - 1, quiet + 1));
      for (std::size_t t = burst + 1; t < trace.size(); ++t) {
        if (!check_clean_state(trace[t], target, tsc.layout) || decode_tsc(trace[t], tsc.layout) != target) {
          check.fail(describe_start("X", value, burst) + " state at t'+" + std::to_string(t) +
                     " is not the clean state storing " + std::to_string(target));
          break;
        }
      }
    }
  }
  return check;
}

CheckResult check_clean_state_stability(std::uint32_t n, std::size_t steps) {
  CheckResult check{"tsc.clean-stable (n=" + std::to_string(n) + ")", "values"};
  const TscNetwork tsc = build_tsc(std_pow2(n) - 1);
  for (std::uint64_t value = 0; value < std_pow2(n + 1); ++value) {
    ++check.cases;
    const FiringState start = make_clean_state(tsc, value, 0, false);
    const Trace trace = run_from(tsc.network, start, std::vector<bool>(steps, false));
    for (std::size_t t = 1; t < trace.size(); ++t) {
      if (trace[t].bits() != start.bits()) {
        check.fail("clean state storing " + std::to_string(value) + " changed after " + std::to_string(t) +
                   " quiet steps");
        break;
      }
    }
  }
  return check;
}

} // namespace spikecount::verification
