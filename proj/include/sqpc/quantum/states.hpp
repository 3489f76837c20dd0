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

#ifndef SQPC_QUANTUM_STATES_HPP
#define SQPC_QUANTUM_STATES_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "sqpc/quantum/gates.hpp"
#include "sqpc/quantum/state_vector.hpp"

namespace sqpc::quantum {

enum class BellOutcome : std::uint8_t { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};

inline std::string_view to_string(BellOutcome b) {
  switch (b) {
    case BellOutcome::PhiPlus: return "PHI+";
    case BellOutcome::PhiMinus: return "PHI-";
    case BellOutcome::PsiPlus: return "PSI+";
    case BellOutcome::PsiMinus: return "PSI-";
  }
  return "?";
}

/// Label of the FMB state sigma_1^y sigma_3^z |chi00>.
struct FmbOutcome {
  int y = 0;
  int z = 0;
  int index() const { return 4 * y + z; }
  static FmbOutcome from_index(std::size_t i) {
    return {static_cast<int>(i / 4), static_cast<int>(i % 4)};
  }
  friend bool operator==(const FmbOutcome&, const FmbOutcome&) = default;
};

template <typename Real = double>
BasicStateVector<Real> prepare_z(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("prepare_z: bit must be 0 or 1");
  BasicStateVector<Real> s(1);
  if (bit == 1) {
    s.amplitude(0) = 0;
    s.amplitude(1) = 1;
  }
  return s;
}

template <typename Real = double>
BasicStateVector<Real> bell_state(BellOutcome which) {
  using V = typename BasicStateVector<Real>::Vector;
  const Real h = Real(1) / std::sqrt(Real(2));
  V a = V::Zero(4);
  switch (which) {
    case BellOutcome::PhiPlus: a << h, 0, 0, h; break;
    case BellOutcome::PhiMinus: a << h, 0, 0, -h; break;
    case BellOutcome::PsiPlus: a << 0, h, h, 0; break;
    case BellOutcome::PsiMinus: a << 0, h, -h, 0; break;
  }
  return BasicStateVector<Real>::from_amplitudes(2, 1, std::move(a));
}

/// The chi-type state: eight terms of magnitude 1/(2 sqrt 2), negative on
/// |1111> and |0101>.
template <typename Real = double>
BasicStateVector<Real> prepare_chi00() {
  const Real c = Real(1) / (Real(2) * std::sqrt(Real(2)));
  BasicStateVector<Real> s(4);
  s.amplitudes().setZero();
  for (unsigned idx : {0b0000u, 0b0011u, 0b1100u, 0b0110u, 0b1001u, 0b1010u}) {
    s.amplitude(idx) = c;
  }
  s.amplitude(0b1111u) = -c;
  s.amplitude(0b0101u) = -c;
  return s;
}

/// sigma^y on `first`, sigma^z on `second`, applied to chi00.
template <typename Real = double>
BasicStateVector<Real> chi_pauli_orbit(int first, int second, int y, int z) {
  auto s = prepare_chi00<Real>();
  apply_single_qubit_inplace(s, first, pauli_matrix<Real>(pauli_from_index(y)));
  apply_single_qubit_inplace(s, second, pauli_matrix<Real>(pauli_from_index(z)));
  return s;
}

/// Four-particle measurement basis state (y, z). The Pauli orbit over
/// particles 1 and 3 is not a basis (sigma^1 x sigma^1 on that pair fixes
/// chi00, so it holds only 8 distinct states); the orbit over particles 1
/// and 2 is, and keeps chi00 as outcome (0,0).
template <typename Real = double>
BasicStateVector<Real> fmb_state(int y, int z) {
  return chi_pauli_orbit<Real>(0, 1, y, z);
}

/// Columns are the measurement basis vectors in the local ordering of the
/// measured qubits (first listed qubit most significant).
template <typename Real = double>
const MatrixX<Real>& z_basis() {
  static const MatrixX<Real> m = MatrixX<Real>::Identity(2, 2);
  return m;
}

template <typename Real = double>
const MatrixX<Real>& bell_basis() {
  static const MatrixX<Real> m = [] {
    MatrixX<Real> b(4, 4);
    for (auto o : kBellOutcomes) b.col(static_cast<int>(o)) = bell_state<Real>(o).amplitudes();
    return b;
  }();
  return m;
}

template <typename Real = double>
const MatrixX<Real>& fmb_basis() {
  static const MatrixX<Real> m = [] {
    MatrixX<Real> b(16, 16);
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) b.col(4 * y + z) = fmb_state<Real>(y, z).amplitudes();
    }
    return b;
  }();
  return m;
}

/// Z(1), Z(2), Bell(3,4) outcome triple allowed by the chi00 expansion
/// |00>phi+ + |11>phi- - |01>psi- + |10>psi+.
constexpr bool z12_bell34_consistent(int z1, int z2, BellOutcome bell34) {
  switch (bell34) {
    case BellOutcome::PhiPlus: return z1 == 0 && z2 == 0;
    case BellOutcome::PhiMinus: return z1 == 1 && z2 == 1;
    case BellOutcome::PsiMinus: return z1 == 0 && z2 == 1;
    case BellOutcome::PsiPlus: return z1 == 1 && z2 == 0;
  }
  return false;
}

/// Bell(1,2), Z(3), Z(4) triple allowed by
/// phi+|00> + phi-|11> - psi-|01> + psi+|10>.
constexpr bool bell12_z34_consistent(BellOutcome bell12, int z3, int z4) {
  switch (bell12) {
    case BellOutcome::PhiPlus: return z3 == 0 && z4 == 0;
    case BellOutcome::PhiMinus: return z3 == 1 && z4 == 1;
    case BellOutcome::PsiMinus: return z3 == 0 && z4 == 1;
    case BellOutcome::PsiPlus: return z3 == 1 && z4 == 0;
  }
  return false;
}

}  // namespace sqpc::quantum

#endif  // SQPC_QUANTUM_STATES_HPP
