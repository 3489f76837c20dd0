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

#ifndef SQPC_ANALYSIS_VERIFICATION_HPP
#define SQPC_ANALYSIS_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqpc/analysis/closed_form.hpp"

namespace sqpc::analysis {

// State-algebra residuals (max absolute amplitude error).
double chi_literal_error();       // prepare_chi00 against its eight signed terms
double fmb_gram_error();          // 16x16 Gram matrix against identity
double orbit13_gram_error();      // same for the Pauli orbit over particles 1 and 3
double z12_bell34_resum_error();  // 1/2 (|00>phi+ + |11>phi- - |01>psi- + |10>psi+)
double bell12_z34_resum_error();  // 1/2 (phi+|00> + phi-|11> - psi-|01> + psi+|10>)

/// Sampled (Z1, Z2, Bell34) and (Bell12, Z3, Z4) triples on chi00 that
/// break the correlation tables, out of `samples` each.
struct CorrelationSample {
  std::size_t samples = 0;
  std::size_t z12_bell34_violations = 0;
  std::size_t bell12_z34_violations = 0;
};
CorrelationSample sample_correlations(std::size_t samples, std::uint64_t seed);

enum class Level : std::uint8_t { Quick, Full };
std::string_view to_string(Level l);

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  std::optional<double> expected;
  double tolerance = 0.0;
  std::string detail;
  bool counted = true;  // false: reported finding, not part of pass()
};

struct VerificationReport {
  Level level = Level::Quick;
  Reference reference = Reference::Published;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Quick: state algebra, correlation tables and exhaustive L = 2
/// correctness. Full adds every Monte Carlo and exact-enumeration check.
VerificationReport run_verification(Level level, std::uint64_t seed, Reference reference);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_VERIFICATION_HPP
