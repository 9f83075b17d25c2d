#include <gtest/gtest.h>

#include <variant>

#include "spikecount/constructions.hpp"
#include "spikecount/errors.hpp"
#include "spikecount/verification/clean_state.hpp"
#include "spikecount/verification/exhaustive.hpp"
#include "spikecount/verification/firing_rules.hpp"
#include "spikecount/verification/lemmas.hpp"
#include "spikecount/verification/oracles.hpp"
#include "spikecount/verification/time0.hpp"

using namespace spikecount;
using namespace spikecount::constructions;
using namespace spikecount::verification;

namespace {

std::vector<bool> bits(std::string_view text) { return InputSequence::parse(text).bits(); }

FiringState tsc_state(const TscNetwork &tsc, std::initializer_list<const char *> hot) {
  FiringState st(tsc.network.size(), 0);
  for (const char *label : hot) st.set(tsc.network.id_of(label), true);
  return st;
}

} // namespace

TEST(Oracles, FirstRunLength) {
  EXPECT_EQ(oracle_first_run_length(bits("00110")), 2u);
  EXPECT_EQ(oracle_first_run_length(bits("00000")), 0u);
  EXPECT_EQ(oracle_first_run_length(bits("10111")), 1u);
  EXPECT_EQ(oracle_first_run_length(bits("")), 0u);
}

TEST(Oracles, TotalSpikes) {
  EXPECT_EQ(oracle_total_spikes(bits("101101")), 4u);
  EXPECT_EQ(oracle_total_spikes(bits("0000")), 0u);
  EXPECT_EQ(oracle_total_spikes(bits("1111111")), 7u);
}

TEST(Oracles, SettlePoints) {
  EXPECT_EQ(first_run_end(bits("0111100")), 5u);
  EXPECT_EQ(first_run_end(bits("000")), 0u);
  EXPECT_EQ(last_run_settle_time(bits("101101")), 7u);
  EXPECT_EQ(last_run_settle_time(bits("000")), 0u);
}

TEST(Exhaustive, FcscPassesAtEight) {
  VerificationReport report = exhaustive_verify(ProblemKind::fcsc, 8, 2);
  ASSERT_EQ(report.checks.size(), 2u);
  for (const auto &c : report.checks) {
    EXPECT_TRUE(c.passed()) << c.name << ": " << c.first_failure;
    EXPECT_EQ(c.cases, 256u);
  }
  EXPECT_NE(format_report(report).find("256/256 inputs pass"), std::string::npos);
}

TEST(Exhaustive, TscPassesAtEight) {
  VerificationReport report = exhaustive_verify(ProblemKind::tsc, 8, 2);
  EXPECT_TRUE(report.passed()) << format_report(report);
}

TEST(Exhaustive, SmallHorizonsPass) {
  for (std::uint64_t T = 1; T <= 6; ++T) {
    EXPECT_TRUE(exhaustive_verify(ProblemKind::fcsc, T, 3).passed()) << T;
    EXPECT_TRUE(exhaustive_verify(ProblemKind::tsc, T, 3).passed()) << T;
  }
}

TEST(Exhaustive, RevertedCaptureBiasFails) {
  FcscNetwork fcsc = build_fcsc(3);
  for (NeuronId y : fcsc.layout.y) {
    fcsc.network = with_bias(fcsc.network, fcsc.network.neuron(y).label, Rational(1, 2));
  }
  VerificationReport report = exhaustive_verify(fcsc, 3, 2);
  ASSERT_FALSE(report.passed());
  const CheckResult &time_one = report.checks.front();
  ASSERT_TRUE(time_one.counterexample.has_value());
  // Replaying the counterexample reproduces it.
  const Counterexample &ce = *time_one.counterexample;
  Trace trace = run(fcsc.network, ce.input, ce.time);
  EXPECT_EQ(static_cast<std::int64_t>(decode_fcsc(trace[ce.time], fcsc.layout)), ce.observed);
  EXPECT_NE(ce.observed, ce.expected);
}

TEST(Exhaustive, RefusesBeyondBound) {
  EXPECT_THROW(exhaustive_verify(ProblemKind::fcsc, 30, 2), BoundExceeded);
  EXPECT_THROW(exhaustive_verify(ProblemKind::fcsc, 0, 2), std::invalid_argument);
  EXPECT_THROW(exhaustive_verify(ProblemKind::tsc, 4, 0), std::invalid_argument);
  EXPECT_TRUE(exhaustive_verify(ProblemKind::tsc, 3, 1, 3).passed());
}

TEST(RuleId, ParsesAndPrints) {
  for (const char *text : {"mod2.z0", "counter.z3", "counter.in2", "capture.y1", "capture.s", "mod4.f1", "mod4.f2",
                           "tsc.z2", "tsc.in4"}) {
    EXPECT_EQ(RuleId::parse(text).to_string(), text);
  }
  EXPECT_EQ(RuleId::parse("mod4.f1").family, RuleFamily::mod4_f1);
  EXPECT_EQ(RuleId::parse("mod4.f0").family, RuleFamily::mod4_f);
  EXPECT_THROW(RuleId::parse("mod5.f1"), std::invalid_argument);
  EXPECT_THROW(RuleId::parse("counter.z0"), std::invalid_argument);
  EXPECT_THROW(RuleId::parse("tsc.in1"), std::invalid_argument);
}

TEST(FiringRules, Mod4ClausesHold) {
  Network net = build_mod4();
  FiringRuleResult f1 = check_firing_rule(net, RuleId{RuleFamily::mod4_f1, 1});
  EXPECT_TRUE(f1.passed());
  EXPECT_EQ(f1.assignments, 32u);
  for (std::uint32_t i : {0u, 2u, 3u}) EXPECT_TRUE(check_firing_rule(net, RuleId{RuleFamily::mod4_f, i}).passed());
}

TEST(FiringRules, CounterAndCaptureYHold) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    FcscNetwork fcsc = build_fcsc((std::uint64_t{1} << n) - 1);
    EXPECT_TRUE(check_firing_rule(fcsc.network, RuleId{RuleFamily::mod2_z0, 0}).passed());
    for (std::uint32_t i = 1; i <= n; ++i) {
      EXPECT_TRUE(check_firing_rule(fcsc.network, RuleId{RuleFamily::counter_z, i}).passed()) << i;
      EXPECT_TRUE(check_firing_rule(fcsc.network, RuleId{RuleFamily::counter_in, i}).passed()) << i;
    }
    for (std::uint32_t i = 0; i <= n; ++i) {
      EXPECT_TRUE(check_firing_rule(fcsc.network, RuleId{RuleFamily::capture_y, i}).passed()) << i;
    }
  }
}

TEST(FiringRules, TscCarryHolds) {
  TscNetwork tsc = build_tsc(15);
  for (std::uint32_t k = 2; k <= 4; ++k) EXPECT_TRUE(check_firing_rule(tsc.network, RuleId{RuleFamily::tsc_in, k}).passed());
}

// Under free enumeration the latch s fires with x = 1 once enough z and y
// neurons are hot: n + 2 of them outweigh w_xs = -(n+1) plus the 0.5 bias.
TEST(FiringRules, CaptureLatchClauseHasUnreachableCounterexamples) {
  FcscNetwork fcsc = build_fcsc(3);
  FiringRuleResult r = check_firing_rule(fcsc.network, RuleId{RuleFamily::capture_s, 0});
  ASSERT_FALSE(r.passed());
  for (const auto &v : r.violations) {
    EXPECT_TRUE(v.assigns("x", true));
    EXPECT_TRUE(v.assigns("s", false));
    EXPECT_FALSE(v.expected);
    EXPECT_TRUE(v.observed);
  }
  // On real runs y never fires without s, and the clause holds throughout.
  for (const auto &input : {"0111100", "1", "1011", "0000000", "1111111"}) {
    Trace trace = run(fcsc.network, InputSequence::parse(input), 10);
    EXPECT_TRUE(check_firing_rule_on_trace(fcsc.network, RuleId{RuleFamily::capture_s, 0}, trace).passed()) << input;
  }
}

// z_k keeps firing through its own carry when every lower digit and f3 are
// hot with f0 quiet: k + 2 against a bias of k + 1.5.
TEST(FiringRules, TscDigitClauseHasUnreachableCounterexample) {
  TscNetwork tsc = build_tsc(8);
  FiringRuleResult r = check_firing_rule(tsc.network, RuleId{RuleFamily::tsc_z, 3});
  ASSERT_EQ(r.violations.size(), 1u);
  const auto &v = r.violations.front();
  for (const char *label : {"x", "f3", "in3", "z2", "z3"}) EXPECT_TRUE(v.assigns(label, true)) << label;
  EXPECT_TRUE(v.assigns("f0", false));

  for (const auto &input : {"11111111", "10110111", "01010101"}) {
    Trace trace = run(tsc.network, InputSequence::parse(input), 11);
    for (std::uint32_t k = 2; k <= 4; ++k) {
      EXPECT_TRUE(check_firing_rule_on_trace(tsc.network, RuleId{RuleFamily::tsc_z, k}, trace).passed()) << input;
    }
  }
}

TEST(FiringRules, RevertedParametersAreCaught) {
  FcscNetwork fcsc = build_fcsc(3);
  Network by = with_bias(fcsc.network, "y0", Rational(1, 2));
  FiringRuleResult y0 = check_firing_rule(by, RuleId{RuleFamily::capture_y, 0});
  ASSERT_FALSE(y0.passed());
  const auto &v = y0.violations.front();
  EXPECT_TRUE(v.assigns("y0", true) && v.assigns("x", true) && v.assigns("s", true) && v.assigns("z0", false));

  Network wf = with_weight(build_mod4(), "f3", "f1", Rational(-3));
  FiringRuleResult f1 = check_firing_rule(wf, RuleId{RuleFamily::mod4_f1, 1});
  ASSERT_FALSE(f1.passed());
  bool found = false;
  for (const auto &viol : f1.violations) {
    found |= viol.assigns("f2", false) && viol.assigns("x", true) && viol.assigns("f0", true) &&
             viol.assigns("f3", true) && viol.assigns("f1", false);
  }
  EXPECT_TRUE(found);

  VerificationReport mutations = verify_mutations();
  EXPECT_EQ(mutations.checks.size(), 3u);
  EXPECT_TRUE(mutations.passed()) << format_report(mutations);
}

TEST(FiringRules, UncoveredPresynapticIsStructural) {
  Network net = with_weight(build_fcsc(3).network, "s", "z1", Rational(1));
  EXPECT_THROW(check_firing_rule(net, RuleId{RuleFamily::counter_z, 1}), StructuralError);
  EXPECT_THROW(check_firing_rule(build_mod4(), RuleId{RuleFamily::tsc_z, 2}), std::invalid_argument);
}

TEST(FiringRules, SuiteReportsExactlyTheKnownDefects) {
  VerificationReport report = verify_firing_rules(2);
  std::vector<std::string> failing;
  for (const auto &c : report.checks) {
    if (!c.passed()) failing.push_back(c.name);
  }
  EXPECT_EQ(failing, (std::vector<std::string>{"capture.s [fcsc n=1]", "capture.s [fcsc n=2]", "tsc.z2 [tsc n=2]"}));
}

TEST(CleanState, DefinitionExamples) {
  TscNetwork tsc = build_tsc(8);
  EXPECT_TRUE(check_clean_state(tsc_state(tsc, {"f1", "z2"}), 5, tsc.layout));
  EXPECT_FALSE(check_clean_state(tsc_state(tsc, {"f1", "f2"}), 1, tsc.layout));
  EXPECT_FALSE(check_clean_state(tsc_state(tsc, {"f1", "f2"}), 2, tsc.layout));
  EXPECT_FALSE(check_clean_state(tsc_state(tsc, {"f3", "z2", "in2"}), 7, tsc.layout));
  EXPECT_TRUE(check_clean_state(tsc_state(tsc, {"f3", "z2"}), 7, tsc.layout));
  // Carries are free unless the value is all ones below them.
  EXPECT_TRUE(check_clean_state(tsc_state(tsc, {"f0", "z2", "in2"}), 4, tsc.layout));
  EXPECT_TRUE(check_clean_state(tsc_state(tsc, {}), 0, tsc.layout));
  EXPECT_FALSE(check_clean_state(tsc_state(tsc, {}), 4, tsc.layout));
  EXPECT_FALSE(check_clean_state(tsc_state(tsc, {"f0"}), 32, tsc.layout));
}

// A clean state carrying a stray in_2 (allowed by the definition) does not
// resume correctly: in_2 suppresses z_2 on the next step.
TEST(CleanState, StrayCarryBreaksResumption) {
  TscNetwork tsc = build_tsc(8);
  FiringState start = tsc_state(tsc, {"f0", "z2", "in2", "x"});
  ASSERT_TRUE(check_clean_state(start, 4, tsc.layout));
  Trace trace = run_from(tsc.network, start, {false, false});
  EXPECT_FALSE(check_clean_state(trace[2], 5, tsc.layout));

  FiringState canonical = make_clean_state(tsc, 4, 0, true);
  Trace good = run_from(tsc.network, canonical, {false, false});
  EXPECT_TRUE(check_clean_state(good[2], 5, tsc.layout));
}

TEST(Lemmas, AllHoldInRange) {
  EXPECT_TRUE(check_mod2_lemma(20).passed());
  EXPECT_TRUE(check_binary_counter(4, 31).passed());
  CheckResult capture = check_capture(3, 10);
  EXPECT_TRUE(capture.passed()) << capture.first_failure;
  EXPECT_TRUE(check_mod4_lemma(8).passed());
  CheckResult tsc = check_tsc_lemma(4, 12, 8);
  EXPECT_TRUE(tsc.passed()) << tsc.first_failure;
  EXPECT_EQ(tsc.cases, 104u);
  EXPECT_TRUE(check_clean_state_stability(4, 5).passed());
}

TEST(Time0, UnaryChainIsStrict) {
  UnaryNetwork unary = build_unary_time0_counter(4);
  LayoutInfo info = layout_info(unary, 4);
  Time0Result r = time0_chain_certificate(
      unary.network, info.output_labels,
      [&](const FiringState &s) -> std::optional<std::uint64_t> { return decode_unary(s, unary.chain); }, 4);
  const auto *chain = std::get_if<ChainCertificate>(&r);
  ASSERT_NE(chain, nullptr);
  EXPECT_TRUE(chain->strict);
  ASSERT_EQ(chain->sets.size(), 5u);
  EXPECT_TRUE(chain->sets[0].empty());
  EXPECT_EQ(chain->sets[2], (std::vector<std::string>{"c1", "c2"}));
  EXPECT_EQ(chain->sets[4], (std::vector<std::string>{"c1", "c2", "c3", "c4"}));
  EXPECT_GE(chain->implied_min_outputs(), 4u);
  EXPECT_LE(chain->implied_min_outputs(), chain->output_count);
}

TEST(Time0, FcscAndTscAreRejected) {
  FcscNetwork fcsc = build_fcsc(4);
  Time0Result f = time0_chain_certificate(
      fcsc.network, layout_info(fcsc, 4).output_labels,
      [&](const FiringState &s) -> std::optional<std::uint64_t> { return decode_fcsc(s, fcsc.layout); }, 4);
  const auto *nf = std::get_if<NotTime0Solver>(&f);
  ASSERT_NE(nf, nullptr);
  EXPECT_EQ(nf->time, 1u);
  EXPECT_EQ(nf->expected, 1u);

  VerificationReport report = verify_time0(4);
  EXPECT_TRUE(report.passed()) << format_report(report);
  EXPECT_EQ(report.checks.size(), 3u);
}

TEST(Report, FormatsAndSerializes) {
  VerificationReport report;
  CheckResult ok("alpha");
  ok.cases = 3;
  report.add(ok);
  CheckResult bad("beta", "assignments");
  bad.cases = 2;
  bad.fail("x=1 broke");
  report.add(bad);
  EXPECT_FALSE(report.passed());
  std::string text = format_report(report);
  EXPECT_NE(text.find("PASS alpha: 3/3 inputs pass"), std::string::npos);
  EXPECT_NE(text.find("FAIL beta: 1/2 assignments pass"), std::string::npos);
  EXPECT_NE(text.find("first counterexample: x=1 broke"), std::string::npos);
  EXPECT_NE(text.find("summary: 1/2 checks pass"), std::string::npos);
  EXPECT_NE(report_json(report).find("\"counterexample\""), std::string::npos);
}
