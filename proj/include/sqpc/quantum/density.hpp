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

#ifndef SQPC_QUANTUM_DENSITY_HPP
#define SQPC_QUANTUM_DENSITY_HPP

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "sqpc/quantum/gates.hpp"
#include "sqpc/quantum/state_vector.hpp"

namespace sqpc::quantum {

/// Reduced density matrix of the probe register (all qubits traced out).
template <typename Real>
MatrixX<Real> probe_density(const BasicStateVector<Real>& state) {
  const Eigen::Index pd = state.probe_dim();
  const Eigen::Index rows = static_cast<Eigen::Index>(state.dimension()) / pd;
  const auto view = state.amplitudes().reshaped(pd, rows);  // column per qubit basis state
  return view * view.adjoint();
}

/// |psi><psi| over the whole register.
template <typename Real>
MatrixX<Real> density_matrix(const BasicStateVector<Real>& state) {
  return state.amplitudes() * state.amplitudes().adjoint();
}

/// Removes the coherences of `qubit` in the Z basis, i.e. the state seen by
/// anyone after an unread Z measurement of that qubit.
template <typename Real>
MatrixX<Real> dephase_z(const MatrixX<Real>& rho, int num_qubits, int qubit, int probe_dim = 1) {
  if (qubit < 0 || qubit >= num_qubits) throw std::out_of_range("dephase_z: qubit out of range");
  const std::size_t stride = static_cast<std::size_t>(probe_dim) << (num_qubits - 1 - qubit);
  MatrixX<Real> out = rho;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
      if (((static_cast<std::size_t>(r) ^ static_cast<std::size_t>(c)) & stride) != 0) out(r, c) = 0;
    }
  }
  return out;
}

/// PSD square root via eigen-decomposition; tiny negative eigenvalues from
/// rounding are clamped to zero.
template <typename Real>
MatrixX<Real> psd_sqrt(const MatrixX<Real>& m) {
  Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(m);
  auto ev = es.eigenvalues().eval();
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = ev(i) > Real(1e-13) ? std::sqrt(ev(i)) : Real(0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 of two normalized
/// density matrices.
template <typename Real>
Real fidelity(const MatrixX<Real>& rho, const MatrixX<Real>& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const MatrixX<Real> s = psd_sqrt(rho);
  const MatrixX<Real> inner = s * sigma * s;
  Eigen::SelfAdjointEigenSolver<MatrixX<Real>> es(inner, Eigen::EigenvaluesOnly);
  Real root = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Real v = es.eigenvalues()(i);
    if (v > Real(1e-13)) root += std::sqrt(v);
  }
  return std::clamp(root * root, Real(0), Real(1));
}

}  // namespace sqpc::quantum

#endif  // SQPC_QUANTUM_DENSITY_HPP
