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

#include "sqpc/analysis/verification.hpp"
#include "sqpc/quantum/density.hpp"
#include "sqpc/quantum/measurement.hpp"
#include "sqpc/quantum/states.hpp"
#include "sqpc/random.hpp"

namespace sqpc::quantum {
namespace {

constexpr double kTol = 1e-12;

TEST(StateVector, ChiAmplitudesAndNorm) {
  const auto chi = prepare_chi00<double>();
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  EXPECT_NEAR(chi.amplitude(0b0000).real(), c, kTol);
  EXPECT_NEAR(chi.amplitude(0b1111).real(), -c, kTol);
  EXPECT_NEAR(chi.amplitude(0b0101).real(), -c, kTol);
  EXPECT_NEAR(chi.amplitude(0b0110).real(), c, kTol);
  EXPECT_NEAR(chi.amplitude(0b0001).real(), 0.0, kTol);
  EXPECT_NEAR(chi.norm_squared(), 1.0, kTol);
  EXPECT_LE(analysis::chi_literal_error(), kTol);
}

TEST(StateVector, QubitZeroIsMostSignificant) {
  BasicStateVector<double> s(3);
  apply_single_qubit_inplace(s, 0, pauli_matrix<double>(Pauli::Sigma1));
  EXPECT_NEAR(std::abs(s.amplitude(0b100)), 1.0, kTol);
}

TEST(StateVector, RejectsOutOfRangeQubit) {
  BasicStateVector<double> s(2);
  SeededSource rng(1);
  EXPECT_THROW(measure_z_inplace(s, 2, rng), std::out_of_range);
  EXPECT_THROW(measure_z_inplace(s, -1, rng), std::out_of_range);
}

TEST(StateVector, AppendAndProbe) {
  auto s = prepare_z<double>(1);
  const int q = s.append_qubit(1);
  EXPECT_EQ(q, 1);
  EXPECT_NEAR(std::abs(s.amplitude(0b11)), 1.0, kTol);
  s.attach_probe(2);
  EXPECT_EQ(s.dimension(), 8u);
  EXPECT_NEAR(std::abs(s.amplitude(0b11, 0)), 1.0, kTol);
  EXPECT_THROW(s.attach_probe(2), std::logic_error);
}

// sigma^2 is |0><1| - |1><0| as printed, so it maps |1> to +|0>.
TEST(Gates, Sigma2SignConvention) {
  const auto s = apply_pauli(prepare_z<double>(1), 0, Pauli::Sigma2);
  EXPECT_NEAR(s.amplitude(0).real(), 1.0, kTol);
  const auto t = apply_pauli(prepare_z<double>(0), 0, Pauli::Sigma2);
  EXPECT_NEAR(t.amplitude(1).real(), -1.0, kTol);
}

TEST(Gates, PaulisPreserveNorm) {
  auto chi = prepare_chi00<double>();
  for (int q = 0; q < 4; ++q) {
    for (int p = 0; p < 4; ++p) chi = apply_pauli(chi, q, pauli_from_index(p));
  }
  EXPECT_NEAR(chi.norm_squared(), 1.0, 1e-10);
}

TEST(Gates, ReprepareZIsDeterministic) {
  SeededSource rng(3);
  for (int bit : {0, 1}) {
    auto chi = prepare_chi00<double>();
    measure_z_inplace(chi, 2, rng);
    reprepare_z(chi, 2, bit);
    EXPECT_NEAR(probability_one(chi, 2), static_cast<double>(bit), kTol);
    EXPECT_NEAR(chi.norm_squared(), 1.0, kTol);
  }
}

TEST(Measurement, ZOnBasisStateIsCertain) {
  SeededSource rng(7);
  for (int i = 0; i < 50; ++i) {
    auto s = prepare_z<double>(1);
    EXPECT_EQ(measure_z_inplace(s, 0, rng), 1);
  }
}

TEST(Measurement, BellEigenstateIsCertain) {
  SeededSource rng(7);
  auto r = measure_bell(bell_state<double>(BellOutcome::PhiMinus), {0, 1}, rng);
  EXPECT_EQ(r.outcome, BellOutcome::PhiMinus);
  EXPECT_NEAR(std::abs(inner_product(r.state, bell_state<double>(BellOutcome::PhiMinus))), 1.0, kTol);
}

TEST(Measurement, ZZThenBellFollowsExpansion) {
  SeededSource rng(11);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    auto chi = prepare_chi00<double>();
    const int z1 = measure_z_inplace(chi, 0, rng);
    const int z2 = measure_z_inplace(chi, 1, rng);
    const auto b = measure_bell_inplace(chi, 2, 3, rng);
    EXPECT_TRUE(z12_bell34_consistent(z1, z2, b));
    if (z1 == 0 && z2 == 0) {
      EXPECT_EQ(b, BellOutcome::PhiPlus);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Measurement, BellOnFirstPairIsUniform) {
  SeededSource rng(13);
  std::array<int, 4> counts{};
  constexpr int n = 100'000;
  for (int i = 0; i < n; ++i) {
    auto chi = prepare_chi00<double>();
    ++counts[static_cast<int>(measure_bell_inplace(chi, 0, 1, rng))];
  }
  for (int c : counts) EXPECT_NEAR(c / static_cast<double>(n), 0.25, 0.01);
}

TEST(Measurement, FmbOnChiIsOutcomeZeroZero) {
  SeededSource rng(17);
  for (int i = 0; i < 100; ++i) {
    auto r = measure_fmb(prepare_chi00<double>(), {0, 1, 2, 3}, rng);
    EXPECT_EQ(r.outcome, (FmbOutcome{0, 0}));
  }
}

TEST(Measurement, FmbEigenstate) {
  SeededSource rng(19);
  auto r = measure_fmb(fmb_state<double>(2, 3), {0, 1, 2, 3}, rng);
  EXPECT_EQ(r.outcome, (FmbOutcome{2, 3}));
  EXPECT_NEAR(std::abs(inner_product(r.state, fmb_state<double>(2, 3))), 1.0, kTol);
}

TEST(Measurement, FmbAfterZOnFirstQubit) {
  // Dephasing qubit 1 leaves <chi|rho|chi> = 2 * (1/2)^2 = 1/2.
  SeededSource rng(23);
  constexpr int n = 100'000;
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    auto chi = prepare_chi00<double>();
    measure_z_inplace(chi, 0, rng);
    hits += measure_fmb_inplace(chi, {0, 1, 2, 3}, rng) == FmbOutcome{0, 0};
  }
  EXPECT_NEAR(hits / static_cast<double>(n), 0.5, 0.01);
}

TEST(Measurement, FmbRejectsRepeatedQubit) {
  SeededSource rng(29);
  EXPECT_THROW(measure_fmb(prepare_chi00<double>(), {0, 1, 2, 2}, rng), std::invalid_argument);
}

TEST(Measurement, SameSeedSameOutcomes) {
  auto sample = [](std::uint64_t seed) {
    SeededSource rng(seed);
    std::vector<int> out;
    for (int i = 0; i < 64; ++i) {
      auto chi = prepare_chi00<double>();
      out.push_back(static_cast<int>(measure_bell_inplace(chi, 0, 1, rng)));
      out.push_back(measure_z_inplace(chi, 2, rng));
    }
    return out;
  };
  EXPECT_EQ(sample(5), sample(5));
  EXPECT_NE(sample(5), sample(6));
}

TEST(Basis, FmbGramIsIdentity) { EXPECT_LE(analysis::fmb_gram_error(), 1e-10); }

TEST(Basis, OrbitOverParticlesOneAndThreeRepeatsStates) {
  // sigma^1 x sigma^1 on that pair fixes chi00.
  const auto a = chi_pauli_orbit<double>(0, 2, 1, 1);
  EXPECT_NEAR(std::abs(inner_product(a, prepare_chi00<double>())), 1.0, kTol);
  EXPECT_NEAR(analysis::orbit13_gram_error(), 1.0, 1e-10);
}

TEST(Basis, BellAndZAreOrthonormal) {
  const auto& b = bell_basis<double>();
  EXPECT_LE((b.adjoint() * b - MatrixX<double>::Identity(4, 4)).cwiseAbs().maxCoeff(), kTol);
}

TEST(Tables, Z12Bell34Membership) {
  EXPECT_TRUE(z12_bell34_consistent(0, 0, BellOutcome::PhiPlus));
  EXPECT_TRUE(z12_bell34_consistent(1, 1, BellOutcome::PhiMinus));
  EXPECT_TRUE(z12_bell34_consistent(0, 1, BellOutcome::PsiMinus));
  EXPECT_TRUE(z12_bell34_consistent(1, 0, BellOutcome::PsiPlus));
  EXPECT_FALSE(z12_bell34_consistent(0, 0, BellOutcome::PsiPlus));
  int allowed = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (auto o : kBellOutcomes) allowed += z12_bell34_consistent(a, b, o);
  EXPECT_EQ(allowed, 4);
}

TEST(Tables, Bell12Z34Membership) {
  EXPECT_TRUE(bell12_z34_consistent(BellOutcome::PhiMinus, 1, 1));
  EXPECT_TRUE(bell12_z34_consistent(BellOutcome::PsiPlus, 1, 0));
  EXPECT_FALSE(bell12_z34_consistent(BellOutcome::PhiPlus, 1, 0));
}

TEST(Tables, DecompositionsResum) {
  EXPECT_LE(analysis::z12_bell34_resum_error(), kTol);
  EXPECT_LE(analysis::bell12_z34_resum_error(), kTol);
}

TEST(Density, FidelityBounds) {
  auto zero = density_matrix(prepare_z<double>(0));
  auto one = density_matrix(prepare_z<double>(1));
  EXPECT_NEAR(fidelity(zero, zero), 1.0, 1e-10);
  EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-10);
  MatrixX<double> mixed = 0.5 * (zero + one);
  EXPECT_NEAR(fidelity(zero, mixed), 0.5, 1e-10);
}

TEST(Density, DephaseKillsCoherence) {
  const auto rho = density_matrix(prepare_chi00<double>());
  const auto d = dephase_z(rho, 4, 0);
  EXPECT_NEAR(std::abs(d(0b0000, 0b1100)), 0.0, kTol);
  EXPECT_NEAR(std::abs(d(0b0000, 0b0011)), 0.125, kTol);
  EXPECT_NEAR(d.trace().real(), 1.0, kTol);
}

TEST(Density, ProbeDensityTracesOutQubits) {
  auto s = prepare_z<double>(0);
  s.attach_probe(2);
  const auto rho = probe_density(s);
  ASSERT_EQ(rho.rows(), 2);
  EXPECT_NEAR(rho(0, 0).real(), 1.0, kTol);
}

}  // namespace
}  // namespace sqpc::quantum
