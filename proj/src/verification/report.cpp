#include "spikecount/verification/report.hpp"

#include <sstream>

#include <json.hpp>

namespace spikecount::verification {

std::string Counterexample::to_string() const {
  std::ostringstream out;
  out << "input=" << (input.size() == 0 ? "<empty>" : input.to_string()) << " t=" << time << " neuron=" << neuron
      << " expected=" << expected << " observed=" << observed;
  return out.str();
}

void CheckResult::fail(Counterexample ce) {
  if (failures++ == 0) {
    first_failure = ce.to_string();
    counterexample = std::move(ce);
  }
}

void CheckResult::fail(std::string description) {
  if (failures++ == 0) first_failure = std::move(description);
}

bool VerificationReport::passed() const {
  for (const auto &c : checks) {
    if (!c.passed()) return false;
  }
  return true;
}

void VerificationReport::append(VerificationReport other) {
  for (auto &c : other.checks) checks.push_back(std::move(c));
}

std::string format_report(const VerificationReport &report) {
  std::ostringstream out;
  std::size_t passing = 0;
  for (const auto &c : report.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << (c.cases - c.failures) << "/" << c.cases << " "
        << c.unit << " pass";
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
    if (!c.first_failure.empty()) {
      out << "     " << (c.passed() ? "evidence: " : "first counterexample: ") << c.first_failure << "\n";
    }
    if (c.passed()) ++passing;
  }
  out << "summary: " << passing << "/" << report.checks.size() << " checks pass\n";
  return out.str();
}

std::string report_json(const VerificationReport &report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto &c : report.checks) {
    nlohmann::ordered_json item{{"name", c.name},
                                {"passed", c.passed()},
                                {"unit", c.unit},
                                {"cases", c.cases},
                                {"failures", c.failures}};
    if (c.counterexample) {
      const auto &ce = *c.counterexample;
      item["counterexample"] = {{"input", ce.input.to_string()},
                                {"time", ce.time},
                                {"neuron", ce.neuron},
                                {"expected", ce.expected},
                                {"observed", ce.observed}};
    } else if (!c.first_failure.empty()) {
      item[c.passed() ? "evidence" : "counterexample"] = c.first_failure;
    }
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(std::move(item));
  }
  return nlohmann::ordered_json{{"passed", report.passed()}, {"checks", std::move(checks)}}.dump(2) + "\n";
}

} // namespace spikecount::verification
