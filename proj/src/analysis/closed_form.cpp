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

#include "sqpc/analysis/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "sqpc/quantum/density.hpp"
#include "sqpc/quantum/states.hpp"

namespace sqpc::analysis {

std::string to_string(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

std::string_view to_string(Reference r) { return r == Reference::Published ? "published" : "oracle"; }

long double overall_detection(const Fraction& per_unit, int units) {
  const long double q = 1.0L - static_cast<long double>(per_unit.numerator()) /
                                   static_cast<long double>(per_unit.denominator());
  return 1.0L - std::pow(q, static_cast<long double>(units));
}

namespace {

// Per-particle values of the published security argument.
Fraction published_intercept_resend(int variant, Phase phase) {
  static const Fraction s1[3] = {Fraction(3, 16), Fraction(1, 4), Fraction(3, 16)};
  static const Fraction s3[3] = {Fraction(3, 8), Fraction(9, 16), Fraction(3, 8)};
  return (phase == Phase::S1 ? s1 : s3)[variant - 1];
}

// Exact single-position values from tests/oracle/episode_oracle.py.
// The second-phase variants 2 and 3 compound two independent checks that
// the published arithmetic treats as one.
Fraction oracle_intercept_resend(int variant, Phase phase) {
  static const Fraction s1[3] = {Fraction(3, 16), Fraction(1, 4), Fraction(3, 16)};
  static const Fraction s3[3] = {Fraction(3, 8), Fraction(21, 32), Fraction(57, 128)};
  return (phase == Phase::S1 ? s1 : s3)[variant - 1];
}

// Any leg: a quarter of the positions are both-reflect, and there the FMB
// check fails with the dephased mismatch probability (1/2 and 3/4).
Fraction oracle_measure_resend(Phase phase) {
  return phase == Phase::S1 ? Fraction(1, 8) : Fraction(3, 16);
}

}  // namespace

ClosedForm detection_closed_form(const adversary::AttackSpec& attack, int L, Reference ref) {
  if (L < 1) throw std::invalid_argument("detection_closed_form: L must be at least 1");
  ClosedForm out;
  Phase phase = Phase::S1;
  if (const auto* ir = std::get_if<adversary::InterceptResend>(&attack)) {
    adversary::validate(attack);
    phase = ir->phase;
    out.per_unit = ref == Reference::Published ? published_intercept_resend(ir->variant, phase)
                                           : oracle_intercept_resend(ir->variant, phase);
  } else if (ref == Reference::Oracle && std::holds_alternative<adversary::MeasureResend>(attack)) {
    phase = std::get<adversary::MeasureResend>(attack).phase;
    out.per_unit = oracle_measure_resend(phase);
  } else if (ref == Reference::Oracle && std::holds_alternative<adversary::NoAttack>(attack)) {
    out.per_unit = 0;
  } else {
    throw std::invalid_argument("no closed form for " + adversary::describe(attack) + " against the " +
                                std::string(to_string(ref)) + " reference");
  }
  out.units = phase == Phase::S1 ? 8 * L : 4 * L;
  out.overall = overall_detection(out.per_unit, out.units);
  return out;
}

double dephased_mismatch_probability(Phase phase) {
  const auto chi = quantum::prepare_chi00<double>();
  quantum::MatrixX<double> rho = quantum::density_matrix(chi);
  if (phase == Phase::S1) {
    rho = quantum::dephase_z(rho, 4, 0);
  } else {
    rho = quantum::dephase_z(quantum::dephase_z(rho, 4, 2), 4, 3);
  }
  const auto& v = chi.amplitudes();
  const double keep = std::real((v.adjoint() * rho * v)(0, 0));
  return 1.0 - keep;
}

}  // namespace sqpc::analysis
