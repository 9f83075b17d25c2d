#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spikecount/simulator.hpp"

namespace spikecount::verification {

/// A run whose observed value disagrees with the expectation. Replaying
/// `input` through the same network reproduces it.
struct Counterexample {
  InputSequence input;
  std::size_t time = 0;
  std::string neuron;
  std::int64_t expected = 0;
  std::int64_t observed = 0;

  std::string to_string() const;
};

struct CheckResult {
  std::string name;
  std::string unit = "inputs";
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// Structured form of the first failure when it is input-driven.
  std::optional<Counterexample> counterexample;
  /// Human-readable first failure (or, for mutation checks, the evidence found).
  std::string first_failure;
  std::string note;

  CheckResult() = default;
  explicit CheckResult(std::string check_name, std::string check_unit = "inputs")
      : name(std::move(check_name)), unit(std::move(check_unit)) {}

  bool passed() const { return failures == 0; }
  void fail(Counterexample ce);
  void fail(std::string description);
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void append(VerificationReport other);
  void add(CheckResult check) { checks.push_back(std::move(check)); }
};

/// One line per check, then a summary line.
std::string format_report(const VerificationReport &report);
std::string report_json(const VerificationReport &report);

} // namespace spikecount::verification
