#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spikecount/network.hpp"
#include "spikecount/simulator.hpp"
#include "spikecount/verification/report.hpp"

namespace spikecount::verification {

/// One-step firing rules of the constructed networks, one family per neuron kind.
enum class RuleFamily {
  mod2_z0,    // z0 fires iff x and not z0
  counter_z,  // counter digit z_i, i >= 1
  counter_in, // counter carry in_i, i >= 1
  capture_y,  // capture output y_i
  capture_s,  // capture latch s
  mod4_f1,    // f1 of the mod-4 counter
  mod4_f,     // f_i of the mod-4 counter, i in {0, 2, 3}
  tsc_z,      // TSC digit z_k, k >= 2
  tsc_in,     // TSC carry in_k, k >= 2
};

/// A single clause, e.g. "counter.z3", "capture.s", "mod4.f2", "tsc.in4".
struct RuleId {
  RuleFamily family = RuleFamily::mod2_z0;
  std::uint32_t index = 0;

  std::string to_string() const;
  /// Throws std::invalid_argument ("unknown rule-id") for anything unrecognised.
  static RuleId parse(std::string_view text);

  friend bool operator==(const RuleId &, const RuleId &) = default;
};

struct FiringRuleViolation {
  std::vector<std::pair<std::string, bool>> assignment;
  bool expected = false;
  bool observed = false;

  bool assigns(std::string_view label, bool value) const;
  std::string to_string() const;
};

struct FiringRuleResult {
  RuleId rule;
  std::string target;
  std::uint64_t assignments = 0;
  std::vector<FiringRuleViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Enumerates every assignment of the clause's predecessor neurons (x
/// included), takes one engine step and compares the target neuron with the
/// clause. Predecessors are free booleans whether or not a run can reach them.
/// Throws std::invalid_argument for a clause that does not apply to `net`,
/// and StructuralError if the target has a presynaptic neuron the clause does
/// not mention.
FiringRuleResult check_firing_rule(const Network &net, RuleId rule);

/// Evaluates the clause along a recorded trace instead: only predecessor
/// states that actually occur are checked.
FiringRuleResult check_firing_rule_on_trace(const Network &net, RuleId rule, const Trace &trace);

std::vector<RuleId> fcsc_rules(std::uint32_t n);
std::vector<RuleId> tsc_rules(std::uint32_t n);

CheckResult to_check(const FiringRuleResult &result, std::string context);

/// All clause families on FCSC and TSC networks with n = 1..max_n, followed
/// by the mutation checks (each passes when the reverted parameter is caught).
VerificationReport verify_firing_rules(std::uint32_t max_n = 4);

/// Mutation checks only.
VerificationReport verify_mutations();

} // namespace spikecount::verification
