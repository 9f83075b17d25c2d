#include <gtest/gtest.h>

#include "spikecount/constructions.hpp"
#include "spikecount/errors.hpp"

using namespace spikecount;
using namespace spikecount::constructions;

namespace {

Rational w(const Network &net, std::string_view src, std::string_view dst) {
  auto value = net.weight(net.id_of(src), net.id_of(dst));
  if (!value) ADD_FAILURE() << "no synapse " << src << "->" << dst;
  return value.value_or(Rational(9999));
}

Rational b(const Network &net, std::string_view label) { return net.neuron(net.id_of(label)).bias; }

std::string s(const char *stem, std::uint32_t i) { return stem + std::to_string(i); }

FiringState decode_state(const Network &net, std::initializer_list<const char *> hot) {
  FiringState st(net.size(), 0);
  for (const char *label : hot) st.set(net.id_of(label), true);
  return st;
}

} // namespace

TEST(Digits, CoverEveryCount) {
  EXPECT_EQ(digits_for_horizon(1), 1u);
  EXPECT_EQ(digits_for_horizon(3), 2u);
  EXPECT_EQ(digits_for_horizon(4), 3u);
  EXPECT_EQ(digits_for_horizon(8), 4u);
  EXPECT_EQ(digits_for_horizon(15), 4u);
  EXPECT_EQ(digits_for_horizon(16), 5u);
}

TEST(Mod2, ExactParameters) {
  Network net = build_mod2_base();
  EXPECT_EQ(net.size(), 2u);
  EXPECT_EQ(w(net, "x", "z0"), Rational(1));
  EXPECT_EQ(w(net, "z0", "z0"), Rational(-1));
  EXPECT_EQ(b(net, "z0"), Rational(1, 2));
  EXPECT_EQ(net.synapses().size(), 2u);
}

TEST(FcscCounter, ExactParameters) {
  const std::uint32_t n = 4;
  Network net = build_fcsc_counter(n);
  EXPECT_EQ(computing_neuron_count(net), 2 * n + 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const auto ii = static_cast<std::int64_t>(i);
    EXPECT_EQ(w(net, "x", s("z", i)), Rational(ii + 1));
    for (std::uint32_t j = 0; j < i; ++j) EXPECT_EQ(w(net, s("z", j), s("z", i)), Rational(1));
    for (std::uint32_t k = 1; k <= i; ++k) EXPECT_EQ(w(net, s("z", k), s("in", i)), Rational(1));
    EXPECT_EQ(w(net, s("in", i), s("z", i)), Rational(-(ii + 1)));
    EXPECT_EQ(w(net, s("z", i), s("z", i)), Rational(ii));
    EXPECT_EQ(b(net, s("z", i)), Rational(4 * ii + 1, 2));
    EXPECT_EQ(b(net, s("in", i)), Rational(2 * ii - 1, 2));
    EXPECT_FALSE(net.weight(net.id_of("z0"), net.id_of(s("in", i))).has_value());
  }
  EXPECT_THROW(build_fcsc_counter(0), std::invalid_argument);
}

TEST(FcscCounter, CountsInBinaryUnderConstantInput) {
  Network net = build_fcsc_counter(3);
  Trace trace = run(net, InputSequence(std::vector<bool>(16, true)), 16);
  for (std::size_t t = 0; t <= 15; ++t) {
    for (std::uint32_t i = 0; i <= 3; ++i) EXPECT_EQ(trace[t][net.id_of(s("z", i))], ((t >> i) & 1U) == 1);
    if (t >= 1) EXPECT_EQ(trace[t][net.id_of("in2")], t % 8 == 7 || t % 8 == 0) << t;
  }
  // The initial condition keeps in_i quiet at t = 0.
  EXPECT_FALSE(trace[0][net.id_of("in2")]);
}

TEST(FcscCounter, ZeroInputStaysQuiet) {
  Network net = build_fcsc_counter(2);
  for (const auto &st : run(net, InputSequence::parse("0000"), 6)) EXPECT_TRUE(st.fired().empty());
}

TEST(Fcsc, ExactCaptureParameters) {
  FcscNetwork fcsc = build_fcsc(8);
  const Network &net = fcsc.network;
  const std::uint32_t n = fcsc.layout.n;
  ASSERT_EQ(n, 4u);
  for (std::uint32_t i = 0; i <= n; ++i) {
    EXPECT_EQ(w(net, "x", s("y", i)), Rational(-2));
    EXPECT_EQ(w(net, s("y", i), s("y", i)), Rational(4));
    EXPECT_EQ(w(net, s("z", i), s("y", i)), Rational(1));
    EXPECT_EQ(w(net, "s", s("y", i)), Rational(-3, 2));
    EXPECT_EQ(w(net, s("z", i), "s"), Rational(1));
    EXPECT_EQ(w(net, s("y", i), "s"), Rational(1));
    EXPECT_EQ(b(net, s("y", i)), Rational(1, 10));
  }
  EXPECT_EQ(w(net, "x", "s"), Rational(-5));
  EXPECT_EQ(w(net, "s", "s"), Rational(6));
  EXPECT_EQ(b(net, "s"), Rational(1, 2));
}

TEST(Fcsc, LayoutAndSize) {
  FcscNetwork fcsc = build_fcsc(4);
  EXPECT_EQ(fcsc.layout.n, 3u);
  EXPECT_EQ(computing_neuron_count(fcsc.network), 12u);
  std::vector<std::string> outputs;
  for (NeuronId id : fcsc.network.outputs()) outputs.push_back(fcsc.network.neuron(id).label);
  EXPECT_EQ(outputs, (std::vector<std::string>{"y0", "y1", "y2", "y3"}));
  EXPECT_EQ(computing_neuron_count(build_fcsc(8).network), 15u);
  EXPECT_THROW(build_fcsc(0), std::invalid_argument);
}

TEST(Fcsc, DecodeIsPlaceValue) {
  FcscNetwork fcsc = build_fcsc(8);
  EXPECT_EQ(decode_fcsc(decode_state(fcsc.network, {"y2"}), fcsc.layout), 4u);
  EXPECT_EQ(decode_fcsc(decode_state(fcsc.network, {}), fcsc.layout), 0u);
  EXPECT_EQ(decode_fcsc(decode_state(fcsc.network, {"y0", "y3", "z1"}), fcsc.layout), 9u);
}

TEST(Fcsc, ShortRunSettles) {
  FcscNetwork fcsc = build_fcsc(4);
  Trace trace = run(fcsc.network, InputSequence::parse("0110"), 6);
  for (std::size_t t = 4; t <= 6; ++t) EXPECT_EQ(decode_fcsc(trace[t], fcsc.layout), 2u) << t;
}

TEST(Fcsc, CaptureLagsTheRunByOneStep) {
  // First run starts at 1 and has length 4; the capture outputs latch at 6.
  FcscNetwork fcsc = build_fcsc(8);
  Trace trace = run(fcsc.network, InputSequence::parse("0111100"), 12);
  EXPECT_EQ(decode_fcsc(trace[5], fcsc.layout), 0u);
  for (std::size_t t = 6; t <= 12; ++t) EXPECT_EQ(decode_fcsc(trace[t], fcsc.layout), 4u) << t;
}

TEST(Fcsc, QuietInputDecodesZero) {
  FcscNetwork fcsc = build_fcsc(6);
  for (const auto &st : run(fcsc.network, InputSequence::parse("000000"), 8)) {
    EXPECT_EQ(decode_fcsc(st, fcsc.layout), 0u);
  }
}

TEST(Mod4, ExactParameters) {
  Network net = build_mod4();
  EXPECT_EQ(net.size(), 5u);
  EXPECT_EQ(net.synapses().size(), 17u);
  for (std::uint32_t i = 0; i < 4; ++i) {
    EXPECT_EQ(w(net, "x", s("f", i)), Rational(1));
    EXPECT_EQ(w(net, s("f", i), s("f", i)), Rational(2));
    EXPECT_EQ(b(net, s("f", i)), i == 1 ? Rational(1, 2) : Rational(3, 2));
  }
  for (std::uint32_t j = 0; j < 3; ++j) EXPECT_EQ(w(net, s("f", j + 1), s("f", j)), Rational(-3));
  EXPECT_EQ(w(net, "f1", "f2"), Rational(1));
  EXPECT_EQ(w(net, "f2", "f3"), Rational(1));
  EXPECT_EQ(w(net, "f3", "f0"), Rational(1));
  EXPECT_EQ(w(net, "f0", "f3"), Rational(-3));
  EXPECT_EQ(w(net, "f3", "f1"), Rational(-7, 10));
  EXPECT_EQ(w(net, "f0", "f1"), Rational(3, 10));
}

TEST(Mod4, BurstAdvancesTheCleanValue) {
  Network net = build_mod4();
  auto after_burst = [&](std::uint32_t start, std::size_t L) {
    FiringState st(net.size(), 0);
    st.set(net.id_of(s("f", start)), true);
    st.set(net.id_of("x"), true);
    std::vector<bool> later(L + 1, false);
    for (std::size_t i = 0; i + 1 < L; ++i) later[i] = true;
    return run_from(net, st, later);
  };
  Trace one = after_burst(0, 1);
  EXPECT_EQ(one[2].fired(), (std::vector<NeuronId>{net.id_of("f1")}));
  Trace two = after_burst(3, 2);
  EXPECT_EQ(two[3].fired(), (std::vector<NeuronId>{net.id_of("f1")}));
  // Mid-burst from 2: f3 and f2 at t'+1, f0 and f3 at t'+2.
  Trace mid = after_burst(2, 3);
  EXPECT_EQ(mid[1].fired(), (std::vector<NeuronId>{net.id_of("x"), net.id_of("f2"), net.id_of("f3")}));
  EXPECT_EQ(mid[2].fired(), (std::vector<NeuronId>{net.id_of("x"), net.id_of("f0"), net.id_of("f3")}));
}

TEST(Tsc, ExactParameters) {
  TscNetwork tsc = build_tsc(16);
  const Network &net = tsc.network;
  ASSERT_EQ(tsc.layout.n, 5u);
  for (std::uint32_t k = 2; k <= 5; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    for (const std::string target : {s("z", k), s("in", k)}) {
      EXPECT_EQ(w(net, "f3", target), Rational(3));
      EXPECT_EQ(w(net, "f0", target), Rational(-1));
      EXPECT_EQ(w(net, "x", target), Rational(1));
      for (std::uint32_t j = 2; j < k; ++j) EXPECT_EQ(w(net, s("z", j), target), Rational(1));
    }
    EXPECT_EQ(w(net, s("in", k), s("z", k)), Rational(-(kk + 3)));
    EXPECT_EQ(w(net, s("z", k), s("in", k)), Rational(1));
    EXPECT_EQ(w(net, s("z", k), s("z", k)), Rational(kk + 3));
    EXPECT_EQ(b(net, s("z", k)), Rational(2 * kk + 3, 2));
    EXPECT_EQ(b(net, s("in", k)), Rational(2 * kk + 5, 2));
  }
}

TEST(Tsc, SizeAndOutputs) {
  TscNetwork tsc = build_tsc(8);
  EXPECT_EQ(computing_neuron_count(tsc.network), 10u);
  std::vector<std::string> outputs;
  for (NeuronId id : tsc.network.outputs()) outputs.push_back(tsc.network.neuron(id).label);
  EXPECT_EQ(outputs, (std::vector<std::string>{"f0", "f1", "f2", "f3", "z2", "z3", "z4"}));
  EXPECT_EQ(computing_neuron_count(build_tsc(1).network), 4u);
  EXPECT_THROW(build_tsc(0), std::invalid_argument);
}

TEST(Tsc, CountsScatteredSpikes) {
  TscNetwork tsc = build_tsc(8);
  Trace trace = run(tsc.network, InputSequence::parse("101101"), 12);
  for (std::size_t t = 7; t <= 12; ++t) EXPECT_EQ(decode_tsc(trace[t], tsc.layout), 4u) << t;
}

TEST(Tsc, FourOnesLeaveCleanValueFour) {
  TscNetwork tsc = build_tsc(4);
  Trace trace = run(tsc.network, InputSequence::parse("1111"), 6);
  std::vector<std::string> hot;
  for (NeuronId id : tsc.layout.outputs()) {
    if (trace[5][id]) hot.push_back(tsc.network.neuron(id).label);
  }
  EXPECT_EQ(hot, (std::vector<std::string>{"f0", "z2"}));
  EXPECT_EQ(decode_tsc(trace[5], tsc.layout), 4u);
}

TEST(Tsc, DecodeRules) {
  TscNetwork tsc = build_tsc(8);
  EXPECT_EQ(decode_tsc(decode_state(tsc.network, {"f2", "z2"}), tsc.layout), 6u);
  EXPECT_EQ(decode_tsc(decode_state(tsc.network, {}), tsc.layout), 0u);
  EXPECT_EQ(decode_tsc(decode_state(tsc.network, {"z3", "in2"}), tsc.layout), 8u);
  EXPECT_THROW(decode_tsc(decode_state(tsc.network, {"f1", "f2"}), tsc.layout), NotCleanStateError);
}

TEST(Tsc, MakeCleanState) {
  TscNetwork tsc = build_tsc(8);
  FiringState st = make_clean_state(tsc, 13, 4, true);
  EXPECT_EQ(st.time(), 4u);
  EXPECT_EQ(decode_tsc(st, tsc.layout), 13u);
  EXPECT_TRUE(st[tsc.layout.x]);
  for (NeuronId id : tsc.layout.in) EXPECT_FALSE(st[id]);
  EXPECT_THROW(make_clean_state(tsc, 32, 0, false), std::invalid_argument);
}

TEST(Unary, ChainGrowsUnderOnes) {
  UnaryNetwork unary = build_unary_time0_counter(3);
  EXPECT_EQ(computing_neuron_count(unary.network), 3u);
  Trace trace = run(unary.network, InputSequence::parse("111"), 3);
  for (std::size_t t = 0; t <= 3; ++t) EXPECT_EQ(decode_unary(trace[t], unary.chain), t);
  EXPECT_EQ(unary.network.weight(unary.chain[1], unary.chain[1]), Rational(2));
  EXPECT_EQ(unary.network.neuron(unary.chain[0]).bias, Rational(1, 2));
  EXPECT_EQ(unary.network.neuron(unary.chain[2]).bias, Rational(3, 2));
}

TEST(Unary, QuietAndSingleSpike) {
  UnaryNetwork three = build_unary_time0_counter(3);
  for (const auto &st : run(three.network, InputSequence::parse("000"), 5)) EXPECT_TRUE(st.fired().empty());

  UnaryNetwork two = build_unary_time0_counter(2);
  Trace trace = run(two.network, InputSequence::parse("10"), 6);
  for (std::size_t t = 1; t <= 6; ++t) {
    EXPECT_TRUE(trace[t][two.chain[0]]);
    EXPECT_FALSE(trace[t][two.chain[1]]);
  }
  EXPECT_THROW(build_unary_time0_counter(0), std::invalid_argument);
}

TEST(LayoutInfo, NamesOutputs) {
  FcscNetwork fcsc = build_fcsc(3);
  LayoutInfo info = layout_info(fcsc, 3);
  EXPECT_EQ(info.kind, "fcsc");
  EXPECT_EQ(info.n, 2u);
  EXPECT_EQ(info.output_labels, (std::vector<std::string>{"y0", "y1", "y2"}));
  EXPECT_EQ(layout_info(build_unary_time0_counter(2), 2).kind, "unary");
  EXPECT_EQ(layout_info(build_tsc(2), 2).kind, "tsc");
}
