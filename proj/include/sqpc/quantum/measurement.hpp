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

#ifndef SQPC_QUANTUM_MEASUREMENT_HPP
#define SQPC_QUANTUM_MEASUREMENT_HPP

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "sqpc/quantum/states.hpp"
#include "sqpc/random.hpp"

namespace sqpc::quantum {

/// Raised when a projection leaves (numerically) nothing behind.
class MeasurementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Gathers the amplitudes of `qubits` into a (2^k x rest) matrix view.
template <typename Real>
struct LocalView {
  std::vector<std::size_t> offsets;  // local index -> amplitude offset
  std::vector<std::size_t> bases;    // rest index -> base amplitude index

  LocalView(const BasicStateVector<Real>& state, std::span<const int> qubits) {
    const std::size_t k = qubits.size();
    std::size_t mask = 0;
    std::vector<std::size_t> strides(k);
    for (std::size_t j = 0; j < k; ++j) {
      strides[j] = state.stride(qubits[j]);
      if (mask & strides[j]) throw std::invalid_argument("measurement qubits must be distinct");
      mask |= strides[j];
    }
    offsets.assign(std::size_t{1} << k, 0);
    for (std::size_t local = 0; local < offsets.size(); ++local) {
      for (std::size_t j = 0; j < k; ++j) {
        if (local & (std::size_t{1} << (k - 1 - j))) offsets[local] += strides[j];
      }
    }
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      if ((i & mask) == 0) bases.push_back(i);
    }
  }

  MatrixX<Real> gather(const BasicStateVector<Real>& state) const {
    MatrixX<Real> m(offsets.size(), bases.size());
    const auto& a = state.amplitudes();
    for (std::size_t r = 0; r < bases.size(); ++r) {
      for (std::size_t l = 0; l < offsets.size(); ++l) {
        m(l, r) = a(static_cast<Eigen::Index>(bases[r] + offsets[l]));
      }
    }
    return m;
  }

  void scatter(BasicStateVector<Real>& state, const MatrixX<Real>& m) const {
    auto& a = state.amplitudes();
    for (std::size_t r = 0; r < bases.size(); ++r) {
      for (std::size_t l = 0; l < offsets.size(); ++l) {
        a(static_cast<Eigen::Index>(bases[r] + offsets[l])) = m(l, r);
      }
    }
  }
};

}  // namespace detail

/// Born-rule probabilities of each basis vector (columns of `basis`) on the
/// listed qubits.
template <typename Real>
std::vector<Real> outcome_probabilities(const BasicStateVector<Real>& state,
                                        std::span<const int> qubits,
                                        const MatrixX<Real>& basis) {
  detail::LocalView<Real> view(state, qubits);
  if (static_cast<std::size_t>(basis.rows()) != view.offsets.size()) {
    throw std::invalid_argument("outcome_probabilities: basis dimension mismatch");
  }
  const MatrixX<Real> coeffs = basis.adjoint() * view.gather(state);
  std::vector<Real> p(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index b = 0; b < basis.cols(); ++b) p[b] = coeffs.row(b).squaredNorm();
  return p;
}

/// Projective measurement in an orthonormal basis on the listed qubits.
/// Collapses `state` in place and returns the outcome column index. The
/// probe register and all other qubits are untouched apart from collapse.
template <typename Real>
std::size_t measure_in_basis(BasicStateVector<Real>& state, std::span<const int> qubits,
                             const MatrixX<Real>& basis, RandomSource& rng) {
  detail::LocalView<Real> view(state, qubits);
  const MatrixX<Real> local = view.gather(state);
  const MatrixX<Real> coeffs = basis.adjoint() * local;
  std::vector<double> p(static_cast<std::size_t>(basis.cols()));
  for (Eigen::Index b = 0; b < basis.cols(); ++b) {
    p[b] = static_cast<double>(coeffs.row(b).squaredNorm());
    if (p[b] < 1e-12) p[b] = 0.0;  // rounding residue, not a real branch
  }
  const std::size_t outcome = rng.choose(p);
  const double prob = p[outcome];
  if (prob < 1e-12) throw MeasurementError("measurement projected onto a null outcome");
  const MatrixX<Real> post =
      basis.col(static_cast<Eigen::Index>(outcome)) * coeffs.row(static_cast<Eigen::Index>(outcome)) /
      static_cast<Real>(std::sqrt(prob));
  view.scatter(state, post);
  return outcome;
}

template <typename Real>
int measure_z_inplace(BasicStateVector<Real>& state, int qubit, RandomSource& rng) {
  const std::array<int, 1> q{qubit};
  return static_cast<int>(measure_in_basis(state, std::span<const int>(q), z_basis<Real>(), rng));
}

template <typename Real>
BellOutcome measure_bell_inplace(BasicStateVector<Real>& state, int qa, int qb, RandomSource& rng) {
  if (qa == qb) throw std::invalid_argument("measure_bell: qubits must be distinct");
  const std::array<int, 2> q{qa, qb};
  return static_cast<BellOutcome>(measure_in_basis(state, std::span<const int>(q), bell_basis<Real>(), rng));
}

template <typename Real>
FmbOutcome measure_fmb_inplace(BasicStateVector<Real>& state, const std::array<int, 4>& quad,
                               RandomSource& rng) {
  return FmbOutcome::from_index(
      measure_in_basis(state, std::span<const int>(quad), fmb_basis<Real>(), rng));
}

template <typename Outcome, typename Real>
struct Measured {
  Outcome outcome;
  BasicStateVector<Real> state;
};

/// Value-returning forms: measure a copy and return (outcome, collapsed state).
template <typename Real>
Measured<int, Real> measure_z(BasicStateVector<Real> state, int qubit, RandomSource& rng) {
  const int bit = measure_z_inplace(state, qubit, rng);
  return {bit, std::move(state)};
}

template <typename Real>
Measured<BellOutcome, Real> measure_bell(BasicStateVector<Real> state, std::pair<int, int> pair,
                                         RandomSource& rng) {
  const BellOutcome b = measure_bell_inplace(state, pair.first, pair.second, rng);
  return {b, std::move(state)};
}

template <typename Real>
Measured<FmbOutcome, Real> measure_fmb(BasicStateVector<Real> state, const std::array<int, 4>& quad,
                                       RandomSource& rng) {
  const FmbOutcome f = measure_fmb_inplace(state, quad, rng);
  return {f, std::move(state)};
}

}  // namespace sqpc::quantum

#endif  // SQPC_QUANTUM_MEASUREMENT_HPP
