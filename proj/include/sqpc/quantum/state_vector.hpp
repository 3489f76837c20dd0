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

#ifndef SQPC_QUANTUM_STATE_VECTOR_HPP
#define SQPC_QUANTUM_STATE_VECTOR_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqpc::quantum {

/// Dense pure state of `num_qubits` qubits tensored with an optional probe
/// register of dimension `probe_dim` (1 = no probe).
///
/// Qubit 0 is the most significant bit of the basis index and the probe
/// index is least significant:
///   |q0 q1 ... q(n-1)> (x) |e>  ->  ((q0 2^(n-1) + ... + q(n-1)) * probe_dim + e)
template <typename Real>
class BasicStateVector {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// |0...0> (x) |0>_probe
  explicit BasicStateVector(int num_qubits = 0, int probe_dim = 1)
      : num_qubits_(num_qubits), probe_dim_(probe_dim) {
    if (num_qubits < 0 || probe_dim < 1) {
      throw std::invalid_argument("BasicStateVector: bad dimensions");
    }
    amps_ = Vector::Zero(static_cast<Eigen::Index>(dimension()));
    amps_(0) = Scalar(1);
  }

  static BasicStateVector from_amplitudes(int num_qubits, int probe_dim,
                                          Vector amps) {
    BasicStateVector s(num_qubits, probe_dim);
    if (static_cast<std::size_t>(amps.size()) != s.dimension()) {
      throw std::invalid_argument("from_amplitudes: expected " +
                                  std::to_string(s.dimension()) +
                                  " amplitudes");
    }
    s.amps_ = std::move(amps);
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  int probe_dim() const { return probe_dim_; }
  std::size_t dimension() const {
    return (std::size_t{1} << num_qubits_) * static_cast<std::size_t>(probe_dim_);
  }

  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }

  Scalar amplitude(std::size_t basis, int probe = 0) const {
    return amps_(static_cast<Eigen::Index>(basis * probe_dim_ + probe));
  }
  Scalar& amplitude(std::size_t basis, int probe = 0) {
    return amps_(static_cast<Eigen::Index>(basis * probe_dim_ + probe));
  }

  /// Distance in the amplitude array between the two values of `qubit`.
  std::size_t stride(int qubit) const {
    check_qubit(qubit);
    return static_cast<std::size_t>(probe_dim_) << (num_qubits_ - 1 - qubit);
  }

  Real norm_squared() const { return amps_.squaredNorm(); }

  void normalize() {
    const Real n = std::sqrt(norm_squared());
    if (n < Real(1e-12)) throw std::runtime_error("normalize: zero vector");
    amps_ /= n;
  }

  void check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
      throw std::out_of_range("qubit index " + std::to_string(qubit) +
                              " out of range for " +
                              std::to_string(num_qubits_) + " qubits");
    }
  }

  /// Tensors a fresh |bit> onto the register as the new last qubit and
  /// returns its index.
  int append_qubit(int bit) {
    const std::size_t old_basis = std::size_t{1} << num_qubits_;
    Vector next = Vector::Zero(static_cast<Eigen::Index>(2 * old_basis * probe_dim_));
    for (std::size_t b = 0; b < old_basis; ++b) {
      for (int e = 0; e < probe_dim_; ++e) {
        next(static_cast<Eigen::Index>(((2 * b) + (bit & 1)) * probe_dim_ + e)) =
            amps_(static_cast<Eigen::Index>(b * probe_dim_ + e));
      }
    }
    amps_ = std::move(next);
    return num_qubits_++;
  }

  /// Tensors a probe register in |0> onto a state that has none yet.
  void attach_probe(int dim) {
    if (probe_dim_ != 1) throw std::logic_error("attach_probe: probe already attached");
    if (dim < 1) throw std::invalid_argument("attach_probe: dimension must be >= 1");
    Vector next = Vector::Zero(static_cast<Eigen::Index>(amps_.size() * dim));
    for (Eigen::Index b = 0; b < amps_.size(); ++b) next(b * dim) = amps_(b);
    amps_ = std::move(next);
    probe_dim_ = dim;
  }

 private:
  int num_qubits_;
  int probe_dim_;
  Vector amps_;
};

using StateVector = BasicStateVector<double>;

template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real>& a,
                                 const BasicStateVector<Real>& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace sqpc::quantum

#endif  // SQPC_QUANTUM_STATE_VECTOR_HPP
