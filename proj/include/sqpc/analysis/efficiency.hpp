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

#ifndef SQPC_ANALYSIS_EFFICIENCY_HPP
#define SQPC_ANALYSIS_EFFICIENCY_HPP

#include <string>
#include <vector>

#include "sqpc/analysis/closed_form.hpp"
#include "sqpc/protocol/types.hpp"

namespace sqpc::analysis {

/// Counts are coefficients of the input length n: alpha compared bits,
/// beta consumed qubits, gamma classical bits.
struct EfficiencyRecord {
  std::string protocol_id;
  std::string label;
  Fraction alpha, beta, gamma;
  Fraction eta;
};

/// alpha / (beta + gamma), exact. Throws std::invalid_argument on a zero
/// denominator.
Fraction qubit_efficiency(const Fraction& alpha, const Fraction& beta, const Fraction& gamma);

/// This protocol first, then nine earlier semiquantum comparison schemes.
std::vector<EfficiencyRecord> efficiency_catalog();

struct ResourceAudit {
  std::size_t beta_observed = 0;
  std::size_t gamma_observed = 0;
  bool match = false;
};

/// Qubits actually prepared and comparison bits actually sent by one run;
/// a match means (64L, 2L) for a completed run.
ResourceAudit resource_audit(const ProtocolOutcome& outcome, int L);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_EFFICIENCY_HPP
