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

#ifndef SQPC_ANALYSIS_CLOSED_FORM_HPP
#define SQPC_ANALYSIS_CLOSED_FORM_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

#include "sqpc/adversary/attack.hpp"

namespace sqpc::analysis {

using Fraction = boost::rational<std::int64_t>;

std::string to_string(const Fraction& f);

/// Which published value a measurement is compared against: the
/// per-particle arithmetic of the protocol's security argument, or the
/// exact branch enumeration oracle.
enum class Reference : std::uint8_t { Published, Oracle };
std::string_view to_string(Reference r);

struct ClosedForm {
  Fraction per_unit;
  int units = 0;              // 8L particles or 4L pairs
  long double overall = 0.0L;  // 1 - (1 - per_unit)^units
};

/// Intercept-resend for either reference; measure-resend and the honest
/// channel for the oracle reference only. Throws std::invalid_argument for
/// anything else.
ClosedForm detection_closed_form(const adversary::AttackSpec& attack, int L,
                                 Reference ref = Reference::Published);

long double overall_detection(const Fraction& per_unit, int units);

/// Probability that TP's FMB check fails on a chi state whose travelling
/// qubit(s) were Z-dephased in transit (one qubit for the first phase, the
/// pair for the second). Computed on the density matrix, not sampled.
double dephased_mismatch_probability(Phase phase);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_CLOSED_FORM_HPP
