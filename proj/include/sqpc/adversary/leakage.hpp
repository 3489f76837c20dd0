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

#ifndef SQPC_ADVERSARY_LEAKAGE_HPP
#define SQPC_ADVERSARY_LEAKAGE_HPP

#include <array>
#include <stdexcept>

#include "sqpc/quantum/gates.hpp"

namespace sqpc::adversary {

class InsufficientEpisodes : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accumulates Eve's probe states split by the value of one secret bit.
/// Weights are path probabilities (exact enumeration) or 1 (sampling).
class ProbeLedger {
 public:
  void add(int secret_bit, const quantum::MatrixX<double>& probe_rho, double weight = 1.0);

  double weight(int secret_bit) const { return weight_[secret_bit & 1]; }
  quantum::MatrixX<double> conditional_state(int secret_bit) const;

  /// Fidelity between the two conditional probe states; 1 means the probe
  /// carries no information about the bit.
  double probe_distinguishability() const;

 private:
  std::array<quantum::MatrixX<double>, 2> sum_;
  std::array<double, 2> weight_{0.0, 0.0};
};

}  // namespace sqpc::adversary

#endif  // SQPC_ADVERSARY_LEAKAGE_HPP
