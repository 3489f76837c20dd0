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

#include "sqpc/analysis/efficiency.hpp"

#include <stdexcept>

namespace sqpc::analysis {

Fraction qubit_efficiency(const Fraction& alpha, const Fraction& beta, const Fraction& gamma) {
  const Fraction denominator = beta + gamma;
  // Boost 1.74 rational == int recurses under C++20 rewritten comparisons.
  if (denominator.numerator() == 0) throw std::invalid_argument("qubit_efficiency: beta + gamma is zero");
  return alpha / denominator;
}

std::vector<EfficiencyRecord> efficiency_catalog() {
  struct Row {
    const char* id;
    const char* label;
    int beta, gamma;
  };
  static constexpr Row rows[] = {
      {"this", "this work", 64, 2}, {"ref22", "Ref.[22]", 80, 2}, {"ref23", "Ref.[23]", 58, 2},
      {"ref26", "Ref.[26]", 8, 2},  {"ref27", "Ref.[27] #2", 30, 2}, {"ref28", "Ref.[28]", 46, 2},
      {"ref29", "Ref.[29]", 34, 2}, {"ref31", "Ref.[31]", 54, 4}, {"ref32", "Ref.[32]", 40, 2},
      {"ref33", "Ref.[33]", 68, 2},
  };
  std::vector<EfficiencyRecord> out;
  for (const auto& r : rows) {
    EfficiencyRecord rec{r.id, r.label, Fraction(1), Fraction(r.beta), Fraction(r.gamma), Fraction(0)};
    rec.eta = qubit_efficiency(rec.alpha, rec.beta, rec.gamma);
    out.push_back(std::move(rec));
  }
  return out;
}

ResourceAudit resource_audit(const ProtocolOutcome& outcome, int L) {
  ResourceAudit a;
  a.beta_observed = outcome.resources.qubits_prepared();
  a.gamma_observed = outcome.resources.classical_bits;
  const auto n = static_cast<std::size_t>(L);
  a.match = outcome.completed() && a.beta_observed == 64 * n && a.gamma_observed == 2 * n;
  return a;
}

}  // namespace sqpc::analysis
