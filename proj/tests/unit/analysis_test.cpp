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

#include <cmath>
#include <numeric>

#include "sqpc/analysis/closed_form.hpp"
#include "sqpc/analysis/episodes.hpp"
#include "sqpc/analysis/estimators.hpp"
#include "sqpc/analysis/replay.hpp"
#include "sqpc/analysis/sweeps.hpp"

namespace sqpc::analysis {
namespace {

using adversary::InterceptResend;
using adversary::MeasureResend;
using adversary::NoAttack;

double as_double(const Fraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

// Frozen from tests/oracle/episode_oracle.py (exact rationals).
struct OracleRow {
  int variant;
  Phase phase;
  Fraction value;
};
const OracleRow kOracle[] = {
    {1, Phase::S1, Fraction(3, 16)}, {2, Phase::S1, Fraction(1, 4)},    {3, Phase::S1, Fraction(3, 16)},
    {1, Phase::S3, Fraction(3, 8)},  {2, Phase::S3, Fraction(21, 32)}, {3, Phase::S3, Fraction(57, 128)},
};

TEST(Oracle, ExactInterceptResendMatchesFrozenValues) {
  for (const auto& row : kOracle) {
    const auto ex = exact_detection(InterceptResend{row.variant, row.phase}, row.phase);
    EXPECT_NEAR(ex.per_unit, as_double(row.value), 1e-12)
        << "v" << row.variant << " " << to_string(row.phase);
    EXPECT_TRUE(detection_closed_form(InterceptResend{row.variant, row.phase}, 1, Reference::Oracle).per_unit ==
                row.value);
  }
}

TEST(Oracle, ExactMeasureResendAndNoAttack) {
  EXPECT_NEAR(exact_detection(MeasureResend{Leg::AliceToBob, Phase::S1}, Phase::S1).per_unit, 1.0 / 8, 1e-12);
  EXPECT_NEAR(exact_detection(MeasureResend{Leg::TpToAlice, Phase::S3}, Phase::S3).per_unit, 3.0 / 16, 1e-12);
  EXPECT_NEAR(exact_detection(NoAttack{}, Phase::S1).per_unit, 0.0, 1e-15);
  EXPECT_NEAR(exact_detection(NoAttack{}, Phase::S3).per_unit, 0.0, 1e-15);
}

TEST(Oracle, DephasedMismatch) {
  EXPECT_NEAR(dephased_mismatch_probability(Phase::S1), 0.5, 1e-12);
  EXPECT_NEAR(dephased_mismatch_probability(Phase::S3), 0.75, 1e-12);
}

TEST(ClosedForm, PublishedValues) {
  const Fraction s1[] = {Fraction(3, 16), Fraction(1, 4), Fraction(3, 16)};
  const Fraction s3[] = {Fraction(3, 8), Fraction(9, 16), Fraction(3, 8)};
  for (int v = 1; v <= 3; ++v) {
    EXPECT_TRUE(detection_closed_form(InterceptResend{v, Phase::S1}, 1, Reference::Published).per_unit == s1[v - 1]);
    EXPECT_TRUE(detection_closed_form(InterceptResend{v, Phase::S3}, 1, Reference::Published).per_unit == s3[v - 1]);
  }
  const auto cf = detection_closed_form(InterceptResend{2, Phase::S1}, 2, Reference::Published);
  EXPECT_EQ(cf.units, 16);
  EXPECT_NEAR(static_cast<double>(cf.overall), 1.0 - std::pow(0.75, 16), 1e-12);
  EXPECT_EQ(detection_closed_form(InterceptResend{2, Phase::S3}, 2, Reference::Published).units, 8);
  EXPECT_THROW(detection_closed_form(MeasureResend{}, 1, Reference::Published), std::invalid_argument);
  EXPECT_EQ(to_string(Fraction(6, 32)), "3/16");
  EXPECT_EQ(to_string(Fraction(4, 2)), "2");
}

TEST(Replay, PathProbabilitiesSumToOne) {
  double total = 0.0;
  const auto paths = enumerate_paths(
      [](RandomSource& rng) {
        const double w[] = {0.25, 0.0, 0.75};
        const auto a = rng.choose(w);
        if (a == 2) rng.bit();
        return a;
      },
      [&](std::size_t, double p) { total += p; });
  EXPECT_EQ(paths, 3u);  // the zero-weight branch is pruned
  EXPECT_NEAR(total, 1.0, 1e-15);
}

TEST(Replay, EpisodePathsSumToOne) {
  const auto ex = exact_detection(InterceptResend{1, Phase::S1}, Phase::S1);
  EXPECT_GT(ex.paths, 16u);
}

TEST(MonteCarlo, AgreesWithExactWithinThreeSigma) {
  constexpr std::size_t n = 20'000;
  for (const auto& row : kOracle) {
    const auto est = detection_rate_mc(InterceptResend{row.variant, row.phase}, row.phase, n, 99);
    EXPECT_TRUE(within_sigma(est.per_unit_rate, as_double(row.value), n))
        << est.per_unit_rate << " vs " << as_double(row.value);
  }
}

TEST(MonteCarlo, ThreadCountDoesNotChangeTheResult) {
  const InterceptResend ir{3, Phase::S3};
  const auto one = detection_rate_mc(ir, Phase::S3, 10'000, 5, 1);
  const auto three = detection_rate_mc(ir, Phase::S3, 10'000, 5, 3);
  EXPECT_EQ(one.detections, three.detections);
  EXPECT_EQ(one.case_detections, three.case_detections);
  const auto other_seed = detection_rate_mc(ir, Phase::S3, 10'000, 6, 1);
  EXPECT_NE(one.detections, other_seed.detections);
}

TEST(MonteCarlo, WithinSigma) {
  EXPECT_TRUE(within_sigma(0.25, 0.25, 100));
  EXPECT_TRUE(within_sigma(0.254, 0.25, 100'000));
  EXPECT_FALSE(within_sigma(0.26, 0.25, 100'000));
  EXPECT_TRUE(within_sigma(0.0, 0.0, 10));
  EXPECT_FALSE(within_sigma(0.001, 0.0, 10));
}

TEST(MonteCarlo, AbortFrequencyIsDeterministic) {
  const InterceptResend ir{2, Phase::S1};
  const auto a = abort_frequency(ir, 1, 300, 8, Sampling::Bernoulli, 1);
  const auto b = abort_frequency(ir, 1, 300, 8, Sampling::Bernoulli, 2);
  EXPECT_EQ(a.security_aborts, b.security_aborts);
  EXPECT_EQ(a.runs, 300u);
  EXPECT_GT(a.frequency, 0.8);
  const auto none = abort_frequency(NoAttack{}, 2, 100, 8);
  EXPECT_EQ(none.security_aborts, 0u);
}

TEST(Sweeps, ExhaustiveCorrectness) {
  const auto r = correctness_sweep(2, 0, 1);
  EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  EXPECT_EQ(r.runs, 16u);
  EXPECT_EQ(r.aborts, 0u);
}

TEST(Sweeps, RandomCorrectness) {
  const auto r = correctness_sweep(4, 40, 2);
  EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
}

TEST(Sweeps, TpIgnorance) {
  const auto r = tp_ignorance_test(2, 2000, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.means.size(), 8u);  // 4 inputs x 2 bits
  for (double m : r.means) EXPECT_NEAR(m, 0.5, 0.05);
  EXPECT_TRUE(r.tp_z_matches_mb);
  EXPECT_LT(std::abs(r.key_mb_correlation), r.correlation_threshold);
}

TEST(Episodes, NonCheckPositionsRecordKeyMaterial) {
  SeededSource rng(4);
  int key_positions = 0;
  for (int i = 0; i < 400; ++i) {
    const auto e = run_episode(NoAttack{}, Phase::S1, rng);
    EXPECT_FALSE(e.detected);
    if (!e.checked) {
      ++key_positions;
      EXPECT_TRUE(e.m_a || e.m_b);
      EXPECT_TRUE(e.case_index == 2 || e.case_index == 3);
    }
  }
  EXPECT_GT(key_positions, 0);
}

}  // namespace
}  // namespace sqpc::analysis
