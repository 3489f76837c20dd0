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

#include <sstream>

#include "sqpc/analysis/sweeps.hpp"
#include "sqpc/protocol/engine.hpp"

namespace sqpc::analysis {
namespace {

std::optional<std::string> check_run(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config) {
  PassiveChannel honest;
  const auto run = run_protocol(p_a, p_b, config, honest);
  std::ostringstream why;
  why << "p_a=" << format_bits(p_a) << " p_b=" << format_bits(p_b) << " seed=" << config.seed << ": ";
  if (!run.outcome.completed()) {
    why << "aborted in " << to_string(run.outcome.abort->stage) << " " << run.outcome.abort->case_label;
    return why.str();
  }
  Bits expect(p_a.size());
  for (std::size_t i = 0; i < p_a.size(); ++i) expect[i] = p_a[i] ^ p_b[i];
  if (*run.outcome.per_bit_c != expect) {
    why << "c=" << format_bits(*run.outcome.per_bit_c) << " expected " << format_bits(expect);
    return why.str();
  }
  if (run.views.alice_K != run.views.bob_K) return why.str() + "keys disagree";
  if (run.views.tp_m_a != run.views.alice_m_a || run.views.tp_m_b != run.views.bob_m_b) {
    return why.str() + "TP's deduced halves differ from the users'";
  }
  const auto swapped = run_protocol(p_b, p_a, config, honest);
  if (!swapped.outcome.completed() || swapped.outcome.verdict != run.outcome.verdict) {
    return why.str() + "verdict changes when inputs are swapped";
  }
  return std::nullopt;
}

Bits bits_of(unsigned value, int L) {
  Bits b(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) b[i] = static_cast<std::uint8_t>((value >> (L - 1 - i)) & 1u);
  return b;
}

}  // namespace

CorrectnessReport correctness_sweep(int L, int trials, std::uint64_t seed) {
  CorrectnessReport out;
  auto record = [&](const Bits& p_a, const Bits& p_b, std::uint64_t run_seed, int len) {
    ProtocolConfig config;
    config.L = len;
    config.seed = run_seed;
    ++out.runs;
    auto failure = check_run(p_a, p_b, config);
    if (failure) {
      if (failure->find("aborted") != std::string::npos) ++out.aborts;
      if (!out.counterexample) out.counterexample = std::move(failure);
      out.pass = false;
    }
  };
  std::uint64_t index = 0;
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      record(bits_of(a, 2), bits_of(b, 2), derive_seed(seed, stream::kRun, index++), 2);
    }
  }
  for (int t = 0; t < trials; ++t) {
    SeededSource inputs(derive_seed(seed, stream::kInputs, index));
    Bits p_a(static_cast<std::size_t>(L)), p_b(static_cast<std::size_t>(L));
    for (auto& x : p_a) x = static_cast<std::uint8_t>(inputs.bit());
    for (auto& x : p_b) x = static_cast<std::uint8_t>(inputs.bit());
    record(p_a, p_b, derive_seed(seed, stream::kRun, index++), L);
  }
  return out;
}

}  // namespace sqpc::analysis
