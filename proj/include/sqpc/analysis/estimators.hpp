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

#ifndef SQPC_ANALYSIS_ESTIMATORS_HPP
#define SQPC_ANALYSIS_ESTIMATORS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "sqpc/adversary/attack.hpp"
#include "sqpc/analysis/closed_form.hpp"

namespace sqpc::analysis {

struct DetectionEstimate {
  std::string attack;
  Phase phase = Phase::S1;
  std::size_t episodes = 0;
  std::size_t detections = 0;
  double per_unit_rate = 0.0;
  double stderr_ = 0.0;  // sqrt(p (1 - p) / n)
  std::array<std::size_t, 4> case_episodes{};
  std::array<std::size_t, 4> case_detections{};
  std::optional<Fraction> reference;

  double case_rate(int c) const {
    return case_episodes[c] ? static_cast<double>(case_detections[c]) / static_cast<double>(case_episodes[c]) : 0.0;
  }
};

/// Episode i draws from derive_seed(seed, episode stream, i). Episodes are
/// processed in fixed chunks and the integer counters are summed in chunk
/// order, so the result does not depend on `threads`.
DetectionEstimate detection_rate_mc(const adversary::AttackSpec& attack, Phase phase,
                                    std::size_t episodes, std::uint64_t seed, unsigned threads = 0);

struct AbortEstimate {
  std::size_t runs = 0;
  std::size_t security_aborts = 0;
  std::size_t insufficient = 0;
  double frequency = 0.0;  // security aborts / runs
  double stderr_ = 0.0;
};

/// Full-protocol runs with random private inputs.
AbortEstimate abort_frequency(const adversary::AttackSpec& attack, int L, std::size_t runs,
                              std::uint64_t seed, Sampling sampling = Sampling::Bernoulli,
                              unsigned threads = 0);

/// Within k standard errors of `reference`, using the binomial standard
/// error at the reference value. A zero reference demands exact zero.
bool within_sigma(double estimate, double reference, std::size_t n, double k = 3.0);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_ESTIMATORS_HPP
