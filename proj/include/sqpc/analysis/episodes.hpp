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

#ifndef SQPC_ANALYSIS_EPISODES_HPP
#define SQPC_ANALYSIS_EPISODES_HPP

#include <array>
#include <optional>

#include "sqpc/adversary/attack.hpp"
#include "sqpc/quantum/gates.hpp"

namespace sqpc::analysis {

/// One position of one phase with its own mode lottery: both parties'
/// coins, the check/keep coin of a lone measuring party in the first phase,
/// the preparation coin and fresh M_A / M_B bits in the second.
struct EpisodeResult {
  Phase phase = Phase::S1;
  int case_index = 0;
  bool checked = false;
  bool detected = false;
  std::optional<int> m_a;                 // key position of a C4 particle
  std::optional<int> m_b;                 // key position of a C3 particle
  std::array<std::optional<int>, 2> k;    // FROM_MA bits of a C4 pair
  std::optional<quantum::MatrixX<double>> probe;
};

EpisodeResult run_episode(const adversary::AttackSpec& attack, Phase phase, RandomSource& rng);

struct ExactDetection {
  double per_unit = 0.0;
  std::array<double, 4> per_case{};  // conditional on the case
  std::size_t paths = 0;
};

/// Detection probability of one position, summed over every path.
ExactDetection exact_detection(const adversary::AttackSpec& attack, Phase phase);

enum class Secret : std::uint8_t { MA, MB, K };
std::string_view to_string(Secret s);

/// Fidelity of Eve's probe states conditioned on the secret bit being 0 or
/// 1, exact over all paths. For K the smaller of the two per-qubit values.
double exact_probe_fidelity(const adversary::AttackSpec& attack, Secret secret);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_EPISODES_HPP
