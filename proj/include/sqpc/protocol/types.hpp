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

#ifndef SQPC_PROTOCOL_TYPES_HPP
#define SQPC_PROTOCOL_TYPES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sqpc/quantum/states.hpp"

namespace sqpc {

using Bits = std::vector<std::uint8_t>;

/// Thrown for invalid configuration or malformed inputs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Phase : std::uint8_t { S1, S3 };
enum class Leg : std::uint8_t { TpToAlice, AliceToBob, BobToTp };

enum class ModeS1 : std::uint8_t { Reflect, Measure };
enum class AliceModeS3 : std::uint8_t { Reflect, Measure2 };
enum class BobModeS3 : std::uint8_t { Reflect, Measure2 };
/// How Alice re-prepares a pair she measured in the second phase.
enum class PrepChoice : std::uint8_t { AsFound, FromMa };

enum class CaseS1 : std::uint8_t { C1, C2, C3, C4 };
enum class CaseS3 : std::uint8_t { C1, C2, C3, C4 };

enum class Usage : std::uint8_t { Check, Private, Discarded };
enum class Sampling : std::uint8_t { Quota, Bernoulli };
enum class Verdict : std::uint8_t { Equal, NotEqual };

std::string_view to_string(Phase p);
std::string_view to_string(Leg l);
std::string_view to_string(CaseS1 c);
std::string_view to_string(CaseS3 c);
std::string_view to_string(Sampling s);
std::string_view to_string(Verdict v);
std::string_view to_string(Usage u);

CaseS1 classify_case_s1(ModeS1 alice, ModeS1 bob);
CaseS3 classify_case_s3(AliceModeS3 alice, BobModeS3 bob);

struct ProtocolConfig {
  int L = 4;
  Sampling sampling = Sampling::Quota;
  double error_threshold = 0.0;
  std::uint64_t seed = 0;

  /// Throws ConfigError when the combination cannot run.
  void validate() const;
};

struct ModesS1 {
  ModeS1 alice = ModeS1::Reflect;
  ModeS1 bob = ModeS1::Reflect;
};

struct ModesS3 {
  AliceModeS3 alice = AliceModeS3::Reflect;
  BobModeS3 bob = BobModeS3::Reflect;
  std::optional<PrepChoice> prep;  // present iff alice measures
};

struct ModeAssignment {
  std::vector<ModesS1> s1;  // 8L entries
  std::vector<ModesS3> s3;  // 4L entries
};

struct ParticleRecordS1 {
  std::size_t position = 0;
  ModesS1 modes;
  CaseS1 case_ = CaseS1::C1;
  Usage used_for = Usage::Check;
  std::optional<int> alice_result;
  std::optional<int> bob_result;
  std::optional<quantum::FmbOutcome> tp_fmb;
  std::optional<int> tp_z_result;       // returned particle
  std::optional<quantum::BellOutcome> tp_bell_34;
  std::optional<int> tp_z_s2;           // the particle TP kept from the second sequence
};

struct PairRecordS3 {
  std::size_t position = 0;
  ModesS3 modes;
  CaseS3 case_ = CaseS3::C1;
  std::optional<std::array<int, 2>> alice_results;
  std::optional<std::array<int, 2>> alice_prepared;
  std::optional<std::array<int, 2>> bob_results;
  std::optional<std::array<int, 2>> bob_prepared;
  std::optional<std::array<std::size_t, 2>> ma_bits_used;
  std::optional<std::array<std::size_t, 2>> mb_bits_used;
  std::optional<quantum::FmbOutcome> tp_fmb;
  std::optional<quantum::BellOutcome> tp_bell_12;
  std::optional<std::array<int, 2>> tp_z_pair;
};

struct PrivateInputs {
  Bits p_a, p_b, M_A, M_B;

  /// Lengths must be L, L, 2L, 4L.
  void validate(int L) const;
};

enum class AbortReason : std::uint8_t { SecurityCheck, InsufficientSample };

struct Abort {
  AbortReason reason = AbortReason::SecurityCheck;
  Phase stage = Phase::S1;
  std::string case_label;
  double observed_error_rate = 0.0;
  std::size_t checked = 0;
  std::size_t failures = 0;
};

/// Failures and checks for one case of one phase.
struct CaseCheckStats {
  std::string case_label;
  std::size_t checked = 0;
  std::size_t failures = 0;
  double error_rate() const {
    return checked == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(checked);
  }
};

struct ResourceCounters {
  std::size_t initial_qubits = 0;
  std::size_t fresh_s1 = 0;
  std::size_t fresh_s3 = 0;
  std::size_t classical_bits = 0;
  std::size_t qubits_prepared() const { return initial_qubits + fresh_s1 + fresh_s3; }
};

struct ProtocolOutcome {
  std::optional<Verdict> verdict;
  std::optional<Bits> per_bit_c;
  std::optional<Abort> abort;
  Bits m_a, m_b, K;
  std::vector<CaseCheckStats> checks;
  ResourceCounters resources;

  bool completed() const { return verdict.has_value(); }
};

Bits parse_bits(std::string_view text);
std::string format_bits(const Bits& bits);

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_TYPES_HPP
