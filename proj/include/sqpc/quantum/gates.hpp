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

#ifndef SQPC_QUANTUM_GATES_HPP
#define SQPC_QUANTUM_GATES_HPP

#include <cstdint>
#include <stdexcept>

#include "sqpc/quantum/state_vector.hpp"

namespace sqpc::quantum {

/// The four Pauli operations sigma^0..sigma^3 used to span the FMB basis.
/// sigma^2 is the real matrix |0><1| - |1><0| (i.e. -iY), not Y itself.
enum class Pauli : std::uint8_t { Sigma0 = 0, Sigma1 = 1, Sigma2 = 2, Sigma3 = 3 };

inline Pauli pauli_from_index(int index) {
  if (index < 0 || index > 3) throw std::out_of_range("Pauli index must be in 0..3");
  return static_cast<Pauli>(index);
}

template <typename Real>
using Matrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real>
using MatrixX = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real = double>
Matrix2<Real> pauli_matrix(Pauli op) {
  Matrix2<Real> m;
  switch (op) {
    case Pauli::Sigma0: m << 1, 0, 0, 1; break;
    case Pauli::Sigma1: m << 0, 1, 1, 0; break;
    case Pauli::Sigma2: m << 0, 1, -1, 0; break;
    case Pauli::Sigma3: m << 1, 0, 0, -1; break;
  }
  return m;
}

template <typename Real>
void apply_single_qubit_inplace(BasicStateVector<Real>& state, int qubit,
                                const Matrix2<Real>& gate) {
  const std::size_t stride = state.stride(qubit);
  auto& a = state.amplitudes();
  const std::size_t dim = state.dimension();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(i);
    const auto i1 = static_cast<Eigen::Index>(i + stride);
    const auto v0 = a(i0);
    const auto v1 = a(i1);
    a(i0) = gate(0, 0) * v0 + gate(0, 1) * v1;
    a(i1) = gate(1, 0) * v0 + gate(1, 1) * v1;
  }
}

template <typename Real>
BasicStateVector<Real> apply_pauli(BasicStateVector<Real> state, int qubit, Pauli op) {
  apply_single_qubit_inplace(state, qubit, pauli_matrix<Real>(op));
  return state;
}

/// Applies `unitary` to (qubit (x) probe). Row/column index of the operator
/// is bit * probe_dim + e.
template <typename Real>
void apply_qubit_probe_unitary(BasicStateVector<Real>& state, int qubit,
                               const MatrixX<Real>& unitary) {
  const int pd = state.probe_dim();
  if (unitary.rows() != 2 * pd || unitary.cols() != 2 * pd) {
    throw std::invalid_argument("apply_qubit_probe_unitary: operator is " +
                                std::to_string(unitary.rows()) + "x" +
                                std::to_string(unitary.cols()) + ", expected " +
                                std::to_string(2 * pd));
  }
  const std::size_t stride = state.stride(qubit);
  const std::size_t num_basis = std::size_t{1} << state.num_qubits();
  const std::size_t qubit_stride = stride / static_cast<std::size_t>(pd);
  auto& a = state.amplitudes();
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> local(2 * pd);
  for (std::size_t b = 0; b < num_basis; ++b) {
    if (b & qubit_stride) continue;
    const std::size_t base = b * static_cast<std::size_t>(pd);
    for (int v = 0; v < 2; ++v) {
      for (int e = 0; e < pd; ++e) {
        local(v * pd + e) = a(static_cast<Eigen::Index>(base + v * stride + e));
      }
    }
    local = unitary * local;
    for (int v = 0; v < 2; ++v) {
      for (int e = 0; e < pd; ++e) {
        a(static_cast<Eigen::Index>(base + v * stride + e)) = local(v * pd + e);
      }
    }
  }
}

/// Probability that `qubit` reads 1 in the Z basis.
template <typename Real>
Real probability_one(const BasicStateVector<Real>& state, int qubit) {
  const std::size_t stride = state.stride(qubit);
  Real p = 0;
  const auto& a = state.amplitudes();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & stride) p += std::norm(a(static_cast<Eigen::Index>(i)));
  }
  return p;
}

/// Discards a qubit that is already in a Z eigenstate and puts a freshly
/// prepared |bit> in its slot. Since the old qubit is a product factor the
/// swap is exact; calling this on an entangled qubit is a logic error.
template <typename Real>
void reprepare_z(BasicStateVector<Real>& state, int qubit, int bit) {
  const Real p1 = probability_one(state, qubit);
  const Real tol = Real(1e-9);
  int current;
  if (p1 < tol) {
    current = 0;
  } else if (p1 > Real(1) - tol) {
    current = 1;
  } else {
    throw std::logic_error("reprepare_z: qubit is not in a Z eigenstate");
  }
  if (current != (bit & 1)) apply_single_qubit_inplace(state, qubit, pauli_matrix<Real>(Pauli::Sigma1));
}

}  // namespace sqpc::quantum

#endif  // SQPC_QUANTUM_GATES_HPP
