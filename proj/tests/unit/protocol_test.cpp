// Copyright 2026 The SQPC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>

#include "sqpc/protocol/engine.hpp"
#include "sqpc/protocol/postprocess.hpp"

namespace sqpc {
namespace {

Bits xor_bits(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

ProtocolRun honest(const std::string& pa, const std::string& pb, int L, std::uint64_t seed,
                   Sampling sampling = Sampling::Quota) {
  ProtocolConfig config;
  config.L = L;
  config.seed = seed;
  config.sampling = sampling;
  PassiveChannel channel;
  return run_protocol(parse_bits(pa), parse_bits(pb), config, channel);
}

TEST(Postprocess, XorIdentities) {
  const Bits p_a = parse_bits("1010"), p_b = parse_bits("1001");
  const Bits K = parse_bits("0110"), m_a = parse_bits("1100"), m_b = parse_bits("0011");
  const Bits g = compute_g(p_a, K, m_a);
  const Bits f = compute_f(p_b, K, m_b);
  EXPECT_EQ(format_bits(g), "0000");
  EXPECT_EQ(format_bits(f), "1100");
  const auto cmp = tp_compare(g, f, m_a, m_b);
  EXPECT_EQ(cmp.c, xor_bits(p_a, p_b));
  EXPECT_EQ(cmp.verdict, Verdict::NotEqual);
  EXPECT_EQ(tp_compare(g, g, m_a, m_a).verdict, Verdict::Equal);
}

TEST(Postprocess, LengthMismatchThrows) {
  EXPECT_THROW(compute_g(parse_bits("10"), parse_bits("1"), parse_bits("11")), std::invalid_argument);
  EXPECT_THROW(tp_compare(parse_bits("1"), parse_bits("1"), parse_bits("1"), parse_bits("")),
               std::invalid_argument);
}

TEST(Types, CaseClassification) {
  EXPECT_EQ(classify_case_s1(ModeS1::Reflect, ModeS1::Reflect), CaseS1::C1);
  EXPECT_EQ(classify_case_s1(ModeS1::Measure, ModeS1::Measure), CaseS1::C2);
  EXPECT_EQ(classify_case_s1(ModeS1::Reflect, ModeS1::Measure), CaseS1::C3);
  EXPECT_EQ(classify_case_s1(ModeS1::Measure, ModeS1::Reflect), CaseS1::C4);
  EXPECT_EQ(classify_case_s3(AliceModeS3::Reflect, BobModeS3::Reflect), CaseS3::C1);
  EXPECT_EQ(classify_case_s3(AliceModeS3::Reflect, BobModeS3::Measure2), CaseS3::C2);
  EXPECT_EQ(classify_case_s3(AliceModeS3::Measure2, BobModeS3::Reflect), CaseS3::C3);
  EXPECT_EQ(classify_case_s3(AliceModeS3::Measure2, BobModeS3::Measure2), CaseS3::C4);
}

TEST(Types, ConfigValidation) {
  ProtocolConfig c;
  c.L = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.L = 3;
  EXPECT_THROW(c.validate(), ConfigError);
  c.sampling = Sampling::Bernoulli;
  EXPECT_NO_THROW(c.validate());
  c.error_threshold = 1.5;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Types, BitParsing) {
  EXPECT_EQ(format_bits(parse_bits("0110")), "0110");
  EXPECT_THROW(parse_bits("01a"), ConfigError);
  EXPECT_THROW(honest("101", "1010", 4, 1), ConfigError);
}

TEST(Engine, TpPreparesTwelveLChiStates) {
  ResourceCounters counters;
  const auto systems = tp_prepare(3, counters);
  EXPECT_EQ(systems.size(), 36u);
  EXPECT_EQ(counters.initial_qubits, 144u);
}

TEST(Engine, QuotaModesFillEveryCase) {
  ProtocolConfig config;
  config.L = 4;
  SeededSource rng(9);
  const auto modes = sample_modes(config, rng);
  ASSERT_EQ(modes.s1.size(), 32u);
  ASSERT_EQ(modes.s3.size(), 16u);
  std::array<int, 4> s1{}, s3{};
  int from_ma = 0;
  for (const auto& m : modes.s1) ++s1[static_cast<int>(classify_case_s1(m.alice, m.bob))];
  for (const auto& m : modes.s3) {
    ++s3[static_cast<int>(classify_case_s3(m.alice, m.bob))];
    from_ma += m.prep == PrepChoice::FromMa;
  }
  for (int c : s1) EXPECT_EQ(c, 8);
  for (int c : s3) EXPECT_EQ(c, 4);
  EXPECT_EQ(from_ma, 4);  // half of the C(3) and C(4) pairs
}

TEST(Engine, HonestRunIsCorrect) {
  const auto run = honest("1010", "1001", 4, 42);
  const auto& o = run.outcome;
  ASSERT_TRUE(o.completed());
  EXPECT_EQ(format_bits(*o.per_bit_c), "0011");
  EXPECT_EQ(*o.verdict, Verdict::NotEqual);
  EXPECT_EQ(run.views.alice_K, run.views.bob_K);
  EXPECT_EQ(run.views.tp_m_a, run.views.alice_m_a);
  EXPECT_EQ(run.views.tp_m_b, run.views.bob_m_b);
  for (const auto& c : o.checks) EXPECT_EQ(c.failures, 0u) << c.case_label;
}

TEST(Engine, EqualInputsGiveEqualVerdict) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto run = honest("0110", "0110", 4, seed);
    ASSERT_TRUE(run.outcome.completed());
    EXPECT_EQ(*run.outcome.verdict, Verdict::Equal);
  }
}

TEST(Engine, ResourcesMatchCount) {
  for (int L : {2, 4, 8}) {
    const std::string zeros(static_cast<std::size_t>(L), '0');
    const auto run = honest(zeros, zeros, L, 5);
    const auto& r = run.outcome.resources;
    EXPECT_EQ(r.qubits_prepared(), 64u * L);
    EXPECT_EQ(r.initial_qubits, 48u * L);
    EXPECT_EQ(r.classical_bits, 2u * L);
  }
}

TEST(Engine, AllReflectGivesZeroZeroEverywhere) {
  ProtocolConfig config;
  config.L = 2;
  config.seed = 3;
  ModeAssignment forced;
  forced.s1.assign(16, ModesS1{});
  forced.s3.assign(8, ModesS3{});
  PassiveChannel channel;
  const auto run = run_protocol(parse_bits("01"), parse_bits("11"), config, channel, forced);
  for (const auto& p : run.s1) {
    ASSERT_TRUE(p.tp_fmb);
    EXPECT_EQ(*p.tp_fmb, (quantum::FmbOutcome{0, 0}));
  }
  ASSERT_TRUE(run.s1_done);
  for (const auto& p : run.s3) {
    ASSERT_TRUE(p.tp_fmb);
    EXPECT_EQ(*p.tp_fmb, (quantum::FmbOutcome{0, 0}));
  }
  // Nothing left for key material.
  ASSERT_TRUE(run.outcome.abort);
  EXPECT_EQ(run.outcome.abort->reason, AbortReason::InsufficientSample);
}

TEST(Engine, SameSeedSameRun) {
  const auto a = honest("1100", "1010", 4, 77);
  const auto b = honest("1100", "1010", 4, 77);
  EXPECT_EQ(a.outcome.m_a, b.outcome.m_a);
  EXPECT_EQ(a.outcome.K, b.outcome.K);
  EXPECT_EQ(a.transcript.messages().size(), b.transcript.messages().size());
}

TEST(Engine, BernoulliHonestRunsNeverFailChecks) {
  int completed = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto run = honest("101", "100", 3, seed, Sampling::Bernoulli);
    const auto& o = run.outcome;
    if (o.abort) {
      EXPECT_EQ(o.abort->reason, AbortReason::InsufficientSample);
      continue;
    }
    ++completed;
    EXPECT_EQ(format_bits(*o.per_bit_c), "001");
  }
  EXPECT_GT(completed, 0);
}

TEST(Engine, KeyUsesFromMaPairsOnly) {
  const auto run = honest("1111", "0000", 4, 8);
  std::size_t from_ma_c4 = 0;
  for (const auto& p : run.s3) {
    if (p.case_ == CaseS3::C4 && p.modes.prep == PrepChoice::FromMa) ++from_ma_c4;
  }
  EXPECT_EQ(run.outcome.K.size(), 4u);
  EXPECT_GE(2 * from_ma_c4, run.outcome.K.size());
}

TEST(Transcript, TpSeesPublicAndPrivateMessagesToIt) {
  const auto run = honest("10", "01", 2, 4);
  const auto& t = run.transcript;
  EXPECT_EQ(t.tp_find("g").visibility, Visibility::TpOnly);
  EXPECT_EQ(t.tp_find("f").visibility, Visibility::TpOnly);
  EXPECT_EQ(t.tp_find("c").visibility, Visibility::Public);
  EXPECT_THROW(t.tp_find("no.such.topic"), std::out_of_range);
  const auto bob = t.tp_table("S1.C2.bob_results");
  EXPECT_FALSE(bob.empty());
}

TEST(Transcript, SwapSymmetry) {
  const auto ab = honest("1100", "1010", 4, 12);
  const auto ba = honest("1010", "1100", 4, 12);
  ASSERT_TRUE(ab.outcome.completed() && ba.outcome.completed());
  EXPECT_EQ(*ab.outcome.per_bit_c, *ba.outcome.per_bit_c);
}

}  // namespace
}  // namespace sqpc
