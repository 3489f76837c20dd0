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

#include "sqpc/adversary/leakage.hpp"

#include "sqpc/quantum/density.hpp"

namespace sqpc::adversary {

void ProbeLedger::add(int secret_bit, const quantum::MatrixX<double>& probe_rho, double weight) {
  const int b = secret_bit & 1;
  if (sum_[b].size() == 0) {
    sum_[b] = quantum::MatrixX<double>::Zero(probe_rho.rows(), probe_rho.cols());
  } else if (sum_[b].rows() != probe_rho.rows()) {
    throw std::invalid_argument("ProbeLedger: probe dimension changed");
  }
  sum_[b] += weight * probe_rho;
  weight_[b] += weight;
}

quantum::MatrixX<double> ProbeLedger::conditional_state(int secret_bit) const {
  const int b = secret_bit & 1;
  if (weight_[b] <= 0.0) {
    throw InsufficientEpisodes("no episode produced secret bit " + std::to_string(b));
  }
  return sum_[b] / weight_[b];
}

double ProbeLedger::probe_distinguishability() const {
  return quantum::fidelity(conditional_state(0), conditional_state(1));
}

}  // namespace sqpc::adversary
