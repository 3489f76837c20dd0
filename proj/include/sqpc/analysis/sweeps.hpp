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

#ifndef SQPC_ANALYSIS_SWEEPS_HPP
#define SQPC_ANALYSIS_SWEEPS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqpc/protocol/types.hpp"

namespace sqpc::analysis {

struct CorrectnessReport {
  bool pass = true;
  std::size_t runs = 0;
  std::size_t aborts = 0;
  std::optional<std::string> counterexample;  // first failure, if any
};

/// Honest quota runs: every (p_a, p_b) at L = 2, then `trials` random pairs
/// at `L`. Each run must complete with c = p_a ^ p_b, agreeing keys, TP's
/// deduced halves equal to the users', and the same verdict with the
/// inputs swapped.
CorrectnessReport correctness_sweep(int L, int trials, std::uint64_t seed);

struct IndependenceReport {
  double statistic = 0.0;  // largest |mean(g_i ^ m_a_i) - 1/2| over p_a and i
  double threshold = 0.0;
  std::size_t trials = 0;
  bool pass = false;
  double key_mb_correlation = 0.0;  // Pearson r between K bits and TP's Z on the same qubits
  double correlation_threshold = 0.0;
  std::size_t correlation_samples = 0;
  bool tp_z_matches_mb = true;
  std::vector<double> means;  // per p_a (ascending) and bit index
};

/// Honest quota runs at fixed inputs: for every p_a of length L, `trials`
/// runs with p_b = 0...0.
IndependenceReport tp_ignorance_test(int L, int trials, std::uint64_t seed);

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_SWEEPS_HPP
