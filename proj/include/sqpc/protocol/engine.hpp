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

#ifndef SQPC_PROTOCOL_ENGINE_HPP
#define SQPC_PROTOCOL_ENGINE_HPP

#include <optional>
#include <vector>

#include "sqpc/protocol/channel.hpp"
#include "sqpc/protocol/transcript.hpp"
#include "sqpc/protocol/types.hpp"
#include "sqpc/quantum/state_vector.hpp"
#include "sqpc/random.hpp"

namespace sqpc {

/// Independent random streams of one run, all derived from the master seed.
struct RunStreams {
  explicit RunStreams(std::uint64_t seed);
  SeededSource modes, nature, alice, bob, eve;
};

/// TP's 12L chi-type systems. Systems [0, 8L) send their first particle in
/// the first phase; systems [8L, 12L) send their last pair in the second.
std::vector<quantum::StateVector> tp_prepare(int L, ResourceCounters& counters);

ModeAssignment sample_modes(const ProtocolConfig& config, RandomSource& rng);

/// Keys each party derives and TP's own deductions; used by tests to check
/// agreement, never read by the protocol logic itself.
struct PartyViews {
  Bits alice_m_a, bob_m_b;  // the users' recorded private halves
  Bits tp_m_a, tp_m_b;      // what TP reads from its own Z results
  Bits alice_K, bob_K;
  Bits g, f;
};

/// Everything a run produced: records, transcript and the outcome.
struct ProtocolRun {
  ProtocolConfig config;
  PrivateInputs inputs;
  ModeAssignment modes;
  std::vector<ParticleRecordS1> s1;
  std::vector<PairRecordS3> s3;
  Transcript transcript;
  PartyViews views;
  ProtocolOutcome outcome;
  std::vector<quantum::StateVector> systems;
  bool s1_done = false;
  bool s3_done = false;
};

/// Mutable state threaded through the phases.
struct RunContext {
  ProtocolRun run;
  RunStreams streams;
  Interceptor& channel;

  RunContext(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config, Interceptor& channel);
};

/// Steps 1-3: transmission of the first 8L particles, announcements and
/// the four-case check; fills m_a / m_b. Returns false on abort.
bool run_s1_phase(RunContext& ctx);

/// Steps 4-5: the pair phase, checks and the shared key K. Returns false on
/// abort.
bool run_s3_phase(RunContext& ctx);

/// Step 6-7: sample-size check, g/f, TP's comparison.
void finish_protocol(RunContext& ctx);

/// Full protocol. `forced_modes` overrides the mode lottery (tests only).
ProtocolRun run_protocol(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config,
                         Interceptor& channel,
                         const std::optional<ModeAssignment>& forced_modes = std::nullopt);

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_ENGINE_HPP
