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

#ifndef SQPC_ADVERSARY_ATTACK_HPP
#define SQPC_ADVERSARY_ATTACK_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "sqpc/adversary/unitary.hpp"
#include "sqpc/protocol/channel.hpp"
#include "sqpc/protocol/engine.hpp"

namespace sqpc::adversary {

struct NoAttack {};

/// Variant 1: fake on TP->Alice, genuine forwarded on Alice->Bob.
/// Variant 2: fake on TP->Alice, genuine swapped back on Bob->TP.
/// Variant 3: fake on Alice->Bob, genuine swapped back on Bob->TP.
struct InterceptResend {
  int variant = 1;
  Phase phase = Phase::S1;
};

struct MeasureResend {
  Leg leg = Leg::TpToAlice;
  Phase phase = Phase::S1;
};

/// Legs on which the first and the second probe unitary act.
enum class Placement : std::uint8_t { TpaThenAb, TpaThenBt, AbThenBt };

struct EntangleMeasure {
  Unitary u_first = identity_unitary(2);
  Unitary u_second = identity_unitary(2);
  int probe_dim = 2;
  Placement placement = Placement::TpaThenAb;
  Phase phase = Phase::S1;
};

using AttackSpec = std::variant<NoAttack, InterceptResend, MeasureResend, EntangleMeasure>;

std::string describe(const AttackSpec& spec);
std::string_view to_string(Placement p);
std::pair<Leg, Leg> placement_legs(Placement p);

/// Throws std::invalid_argument for an ill-formed spec (bad variant,
/// non-unitary or wrongly sized operator).
void validate(const AttackSpec& spec);

std::unique_ptr<Interceptor> make_interceptor(const AttackSpec& spec);

/// Substitutes Z-basis fakes for the genuine system and swaps the genuine
/// one back in later. Every qubit it ever held is tracked so that a
/// genuine system can never be kept or duplicated.
class InterceptResendChannel final : public Interceptor {
 public:
  explicit InterceptResendChannel(InterceptResend spec);
  void begin_position(Phase phase, std::size_t position, quantum::StateVector& world) override;
  void on_leg(LegEvent& event, RandomSource& rng) override;
  void end_position(Phase phase, std::size_t position, const quantum::StateVector& world) override;

 private:
  InterceptResend spec_;
  std::vector<int> held_;
  int genuine_limit_ = 0;  // qubits below this index belong to TP's system
};

class MeasureResendChannel final : public Interceptor {
 public:
  explicit MeasureResendChannel(MeasureResend spec) : spec_(spec) {}
  void on_leg(LegEvent& event, RandomSource& rng) override;

 private:
  MeasureResend spec_;
};

/// Entangles the travelling system with a probe shared by both unitaries.
/// A pair is attacked qubit by qubit with the same probe.
class EntangleMeasureChannel final : public Interceptor {
 public:
  explicit EntangleMeasureChannel(EntangleMeasure spec);
  void begin_position(Phase phase, std::size_t position, quantum::StateVector& world) override;
  void on_leg(LegEvent& event, RandomSource& rng) override;
  void end_position(Phase phase, std::size_t position, const quantum::StateVector& world) override;

  /// Probe density after the last leg of the most recent attacked position.
  const std::optional<quantum::MatrixX<double>>& probe_snapshot() const { return snapshot_; }

 private:
  EntangleMeasure spec_;
  bool attached_ = false;
  std::optional<quantum::MatrixX<double>> snapshot_;
};

/// Full protocol run with the attack bound to the channel.
ProtocolRun run_protocol(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config,
                         const AttackSpec& attack);

}  // namespace sqpc::adversary

#endif  // SQPC_ADVERSARY_ATTACK_HPP
