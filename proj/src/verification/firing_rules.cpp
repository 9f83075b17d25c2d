#include "spikecount/verification/firing_rules.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spikecount/constructions.hpp"
#include "spikecount/errors.hpp"
#include "spikecount/verification/exhaustive.hpp"

namespace spikecount::verification {
namespace {

struct FamilyName {
  RuleFamily family;
  std::string_view prefix;
};

constexpr std::array<FamilyName, 9> kFamilies{{
    {RuleFamily::mod2_z0, "mod2.z"},
    {RuleFamily::counter_z, "counter.z"},
    {RuleFamily::counter_in, "counter.in"},
    {RuleFamily::capture_y, "capture.y"},
    {RuleFamily::capture_s, "capture.s"},
    {RuleFamily::mod4_f1, "mod4.f"},
    {RuleFamily::mod4_f, "mod4.f"},
    {RuleFamily::tsc_z, "tsc.z"},
    {RuleFamily::tsc_in, "tsc.in"},
}};

std::string label(std::string_view stem, std::uint32_t i) { return std::string(stem) + std::to_string(i); }

// Values of the clause variables for one assignment, looked up by label.
class Assignment {
public:
  Assignment(const std::vector<std::string> &labels, const std::vector<bool> &values)
      : labels_(labels), values_(values) {}

  bool operator()(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == name) return values_[i];
    }
    throw std::logic_error("clause reads undeclared variable " + std::string(name));
  }

  bool all(std::string_view stem, std::uint32_t from, std::uint32_t to_exclusive) const {
    for (std::uint32_t j = from; j < to_exclusive; ++j) {
      if (!(*this)(label(stem, j))) return false;
    }
    return true;
  }

  bool any(std::string_view stem, std::uint32_t from, std::uint32_t to_exclusive) const {
    for (std::uint32_t j = from; j < to_exclusive; ++j) {
      if ((*this)(label(stem, j))) return true;
    }
    return false;
  }

private:
  const std::vector<std::string> &labels_;
  const std::vector<bool> &values_;
};

struct Clause {
  std::string target;
  std::vector<std::string> variables;
  std::function<bool(const Assignment &)> fires;
};

// Highest index i with a neuron labelled stem+i, counting up from `from`.
std::uint32_t highest_index(const Network &net, std::string_view stem, std::uint32_t from) {
  std::uint32_t i = from;
  if (!net.find(label(stem, i))) {
    throw std::invalid_argument("network has no neuron " + label(stem, i));
  }
  while (net.find(label(stem, i + 1))) ++i;
  return i;
}

Clause make_clause(const Network &net, RuleId rule) {
  const std::uint32_t i = rule.index;
  Clause c;
  auto vars = [&c](std::initializer_list<std::string> names) { c.variables.insert(c.variables.end(), names); };
  auto var_range = [&c](std::string_view stem, std::uint32_t from, std::uint32_t to_inclusive) {
    for (std::uint32_t j = from; j <= to_inclusive; ++j) c.variables.push_back(label(stem, j));
  };

  switch (rule.family) {
  case RuleFamily::mod2_z0:
    c.target = "z0";
    vars({"x", "z0"});
    c.fires = [](const Assignment &a) { return a("x") && !a("z0"); };
    break;
  case RuleFamily::counter_z:
    c.target = label("z", i);
    vars({"x", label("in", i)});
    var_range("z", 0, i);
    c.fires = [i](const Assignment &a) {
      return a("x") && !a(label("in", i)) && (a.all("z", 0, i) || a(label("z", i)));
    };
    break;
  case RuleFamily::counter_in:
    c.target = label("in", i);
    var_range("z", 1, i);
    c.fires = [i](const Assignment &a) { return a.all("z", 1, i + 1); };
    break;
  case RuleFamily::capture_y:
    c.target = label("y", i);
    vars({"x", "s", label("y", i), label("z", i)});
    c.fires = [i](const Assignment &a) {
      bool y = a(label("y", i));
      return y || (!a("x") && !a("s") && a(label("z", i)));
    };
    break;
  case RuleFamily::capture_s: {
    const std::uint32_t n = highest_index(net, "y", 0);
    c.target = "s";
    vars({"x", "s"});
    var_range("z", 0, n);
    var_range("y", 0, n);
    c.fires = [n](const Assignment &a) {
      return a("s") || ((a.any("z", 0, n + 1) || a.any("y", 0, n + 1)) && !a("x"));
    };
    break;
  }
  case RuleFamily::mod4_f1:
    c.target = "f1";
    vars({"x", "f0", "f1", "f2", "f3"});
    c.fires = [](const Assignment &a) {
      return !a("f2") && ((a("x") && !a("f3")) || a("f1") || (a("x") && a("f0")));
    };
    break;
  case RuleFamily::mod4_f: {
    const std::string self = label("f", i);
    const std::string prev = label("f", (i + 3) % 4);
    const std::string next = label("f", (i + 1) % 4);
    c.target = self;
    vars({"x", self, prev, next});
    c.fires = [self, prev, next](const Assignment &a) { return !a(next) && ((a("x") && a(prev)) || a(self)); };
    break;
  }
  case RuleFamily::tsc_z:
    c.target = label("z", i);
    vars({"x", "f0", "f3", label("in", i)});
    var_range("z", 2, i);
    c.fires = [i](const Assignment &a) {
      bool carry_in = a("f3") && !a("f0") && a("x") && a.all("z", 2, i);
      return !a(label("in", i)) && (carry_in || a(label("z", i)));
    };
    break;
  case RuleFamily::tsc_in:
    c.target = label("in", i);
    vars({"x", "f0", "f3"});
    var_range("z", 2, i);
    c.fires = [i](const Assignment &a) { return a(label("z", i)) && a("f3") && !a("f0") && a("x") && a.all("z", 2, i); };
    break;
  }

  for (const auto &v : c.variables) {
    if (!net.find(v)) {
      throw std::invalid_argument("rule " + rule.to_string() + " does not apply: no neuron " + v);
    }
  }
  const NeuronId target = net.id_of(c.target);
  for (NeuronId pre : net.presynaptic(target)) {
    const std::string &name = net.neuron(pre).label;
    if (std::find(c.variables.begin(), c.variables.end(), name) == c.variables.end()) {
      throw StructuralError("rule " + rule.to_string() + " does not cover presynaptic neuron " + name + " of " +
                            c.target);
    }
  }
  return c;
}

void validate_index(RuleId rule) {
  bool ok = true;
  switch (rule.family) {
  case RuleFamily::mod2_z0:
  case RuleFamily::capture_s:
    ok = rule.index == 0;
    break;
  case RuleFamily::mod4_f1:
    ok = rule.index == 1;
    break;
  case RuleFamily::mod4_f:
    ok = rule.index == 0 || rule.index == 2 || rule.index == 3;
    break;
  case RuleFamily::counter_z:
  case RuleFamily::counter_in:
    ok = rule.index >= 1;
    break;
  case RuleFamily::tsc_z:
  case RuleFamily::tsc_in:
    ok = rule.index >= 2;
    break;
  case RuleFamily::capture_y:
    break;
  }
  if (!ok) throw std::invalid_argument("unknown rule-id " + rule.to_string());
}

} // namespace

std::string RuleId::to_string() const {
  switch (family) {
  case RuleFamily::mod2_z0:
    return "mod2.z0";
  case RuleFamily::capture_s:
    return "capture.s";
  default:
    break;
  }
  for (const auto &f : kFamilies) {
    if (f.family == family) return std::string(f.prefix) + std::to_string(index);
  }
  return "?";
}

RuleId RuleId::parse(std::string_view text) {
  if (text == "mod2.z0") return {RuleFamily::mod2_z0, 0};
  if (text == "capture.s") return {RuleFamily::capture_s, 0};
  for (const auto &f : kFamilies) {
    if (f.family == RuleFamily::mod2_z0 || f.family == RuleFamily::capture_s) continue;
    if (text.substr(0, f.prefix.size()) != f.prefix) continue;
    std::string_view digits = text.substr(f.prefix.size());
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      break;
    }
    auto index = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    RuleId id{f.family, index};
    if (f.prefix == "mod4.f") id.family = index == 1 ? RuleFamily::mod4_f1 : RuleFamily::mod4_f;
    validate_index(id);
    return id;
  }
  throw std::invalid_argument("unknown rule-id '" + std::string(text) + "'");
}

bool FiringRuleViolation::assigns(std::string_view name, bool value) const {
  for (const auto &[l, v] : assignment) {
    if (l == name) return v == value;
  }
  return false;
}

std::string FiringRuleViolation::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    out << (i ? ", " : "") << assignment[i].first << "=" << assignment[i].second;
  }
  out << "} expected=" << expected << " observed=" << observed;
  return out.str();
}

FiringRuleResult check_firing_rule(const Network &net, RuleId rule) {
  validate_index(rule);
  const Clause clause = make_clause(net, rule);
  const NeuronId target = net.id_of(clause.target);
  std::vector<NeuronId> ids;
  for (const auto &v : clause.variables) ids.push_back(net.id_of(v));

  FiringRuleResult result{rule, clause.target, 0, {}};
  const std::size_t k = ids.size();
  std::vector<bool> values(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    FiringState prev(net.size(), 0);
    for (std::size_t v = 0; v < k; ++v) {
      values[v] = (mask >> v) & 1U;
      prev.set(ids[v], values[v]);
    }
    const bool expected = clause.fires(Assignment(clause.variables, values));
    const bool observed = step(net, prev, false)[target];
    ++result.assignments;
    if (expected != observed) {
      FiringRuleViolation violation{{}, expected, observed};
      for (std::size_t v = 0; v < k; ++v) violation.assignment.emplace_back(clause.variables[v], values[v]);
      result.violations.push_back(std::move(violation));
    }
  }
  return result;
}

FiringRuleResult check_firing_rule_on_trace(const Network &net, RuleId rule, const Trace &trace) {
  validate_index(rule);
  const Clause clause = make_clause(net, rule);
  const NeuronId target = net.id_of(clause.target);
  std::vector<NeuronId> ids;
  for (const auto &v : clause.variables) ids.push_back(net.id_of(v));

  FiringRuleResult result{rule, clause.target, 0, {}};
  std::vector<bool> values(ids.size());
  for (std::size_t t = 0; t + 1 < trace.size(); ++t) {
    for (std::size_t v = 0; v < ids.size(); ++v) values[v] = trace[t][ids[v]];
    const bool expected = clause.fires(Assignment(clause.variables, values));
    const bool observed = trace[t + 1][target];
    ++result.assignments;
    if (expected != observed) {
      FiringRuleViolation violation{{}, expected, observed};
      for (std::size_t v = 0; v < ids.size(); ++v) violation.assignment.emplace_back(clause.variables[v], values[v]);
      result.violations.push_back(std::move(violation));
    }
  }
  return result;
}

std::vector<RuleId> fcsc_rules(std::uint32_t n) {
  std::vector<RuleId> rules{{RuleFamily::mod2_z0, 0}};
  for (std::uint32_t i = 1; i <= n; ++i) rules.push_back({RuleFamily::counter_z, i});
  for (std::uint32_t i = 1; i <= n; ++i) rules.push_back({RuleFamily::counter_in, i});
  for (std::uint32_t i = 0; i <= n; ++i) rules.push_back({RuleFamily::capture_y, i});
  rules.push_back({RuleFamily::capture_s, 0});
  return rules;
}

std::vector<RuleId> tsc_rules(std::uint32_t n) {
  std::vector<RuleId> rules{{RuleFamily::mod4_f, 0}, {RuleFamily::mod4_f1, 1}, {RuleFamily::mod4_f, 2},
                            {RuleFamily::mod4_f, 3}};
  for (std::uint32_t k = 2; k <= n; ++k) rules.push_back({RuleFamily::tsc_z, k});
  for (std::uint32_t k = 2; k <= n; ++k) rules.push_back({RuleFamily::tsc_in, k});
  return rules;
}

CheckResult to_check(const FiringRuleResult &result, std::string context) {
  CheckResult check{result.rule.to_string() + " [" + context + "]", "assignments"};
  check.cases = result.assignments;
  check.failures = result.violations.size();
  if (!result.violations.empty()) check.first_failure = result.violations.front().to_string();
  return check;
}

VerificationReport verify_firing_rules(std::uint32_t max_n) {
  VerificationReport report;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    const std::uint64_t T = (std::uint64_t{1} << n) - 1; // largest horizon with n digits
    auto fcsc = constructions::build_fcsc(T);
    for (RuleId rule : fcsc_rules(n)) {
      report.add(to_check(check_firing_rule(fcsc.network, rule), "fcsc n=" + std::to_string(n)));
    }
    auto tsc = constructions::build_tsc(T);
    for (RuleId rule : tsc_rules(n)) {
      report.add(to_check(check_firing_rule(tsc.network, rule), "tsc n=" + std::to_string(n)));
    }
  }
  report.append(verify_mutations());
  return report;
}

VerificationReport verify_mutations() {
  VerificationReport report;

  // Each check passes when the reverted parameter is caught by a counterexample.
  auto caught = [](std::string name, const FiringRuleResult &r) {
    CheckResult check{std::move(name), "mutations"};
    check.cases = 1;
    if (r.violations.empty()) {
      check.fail("no counterexample found for " + r.rule.to_string());
    } else {
      check.first_failure = r.rule.to_string() + " " + r.violations.front().to_string();
    }
    return check;
  };

  auto fcsc = constructions::build_fcsc(3);
  auto loose_capture = with_bias(fcsc.network, "y0", Rational(1, 2));
  report.add(caught("mutation.capture-bias-0.5 (rule)", check_firing_rule(loose_capture, {RuleFamily::capture_y, 0})));

  auto mod4 = constructions::build_mod4();
  auto strong_inhibition = with_weight(mod4, "f3", "f1", Rational(-3));
  report.add(caught("mutation.f3-f1-weight--3 (rule)", check_firing_rule(strong_inhibition, {RuleFamily::mod4_f1, 1})));

  // End-to-end: every capture bias reverted, FCSC(3) must miscount somewhere.
  constructions::FcscNetwork mutated = fcsc;
  for (std::uint32_t i = 0; i <= fcsc.layout.n; ++i) {
    mutated.network = with_bias(mutated.network, "y" + std::to_string(i), Rational(1, 2));
  }
  CheckResult sweep{"mutation.capture-bias-0.5 (fcsc T=3 sweep)", "mutations"};
  sweep.cases = 1;
  VerificationReport inner = exhaustive_verify(mutated, 3, 2);
  for (const auto &c : inner.checks) {
    if (!c.passed()) {
      sweep.first_failure = c.name + " " + c.first_failure;
      break;
    }
  }
  if (inner.passed()) sweep.fail("FCSC(3) with b_y = 0.5 passed the exhaustive sweep");
  report.add(std::move(sweep));
  return report;
}

} // namespace spikecount::verification
