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

#include "sqpc/protocol/types.hpp"

#include <string>

namespace sqpc {

std::string_view to_string(Phase p) { return p == Phase::S1 ? "S1" : "S3"; }

std::string_view to_string(Leg l) {
  switch (l) {
    case Leg::TpToAlice: return "TP_TO_ALICE";
    case Leg::AliceToBob: return "ALICE_TO_BOB";
    case Leg::BobToTp: return "BOB_TO_TP";
  }
  return "?";
}

std::string_view to_string(CaseS1 c) {
  static constexpr std::string_view names[] = {"C1", "C2", "C3", "C4"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(CaseS3 c) {
  static constexpr std::string_view names[] = {"C(1)", "C(2)", "C(3)", "C(4)"};
  return names[static_cast<int>(c)];
}

std::string_view to_string(Sampling s) { return s == Sampling::Quota ? "quota" : "bernoulli"; }
std::string_view to_string(Verdict v) { return v == Verdict::Equal ? "EQUAL" : "NOT_EQUAL"; }

std::string_view to_string(Usage u) {
  switch (u) {
    case Usage::Check: return "CHECK";
    case Usage::Private: return "PRIVATE";
    case Usage::Discarded: return "DISCARDED";
  }
  return "?";
}

CaseS1 classify_case_s1(ModeS1 alice, ModeS1 bob) {
  const bool a = alice == ModeS1::Measure;
  const bool b = bob == ModeS1::Measure;
  if (!a && !b) return CaseS1::C1;
  if (a && b) return CaseS1::C2;
  return b ? CaseS1::C3 : CaseS1::C4;
}

CaseS3 classify_case_s3(AliceModeS3 alice, BobModeS3 bob) {
  const bool a = alice == AliceModeS3::Measure2;
  const bool b = bob == BobModeS3::Measure2;
  if (!a && !b) return CaseS3::C1;
  if (a && b) return CaseS3::C4;
  return b ? CaseS3::C2 : CaseS3::C3;
}

void ProtocolConfig::validate() const {
  if (L < 1) throw ConfigError("L must be at least 1");
  if (sampling == Sampling::Quota && (L < 2 || L % 2 != 0)) {
    throw ConfigError("quota sampling needs an even L >= 2 (got " + std::to_string(L) + ")");
  }
  if (!(error_threshold >= 0.0 && error_threshold <= 1.0)) {
    throw ConfigError("error_threshold must lie in [0, 1]");
  }
}

void PrivateInputs::validate(int L) const {
  const auto n = static_cast<std::size_t>(L);
  if (p_a.size() != n || p_b.size() != n) {
    throw ConfigError("private inputs must have length L = " + std::to_string(L) + " (got " +
                      std::to_string(p_a.size()) + " and " + std::to_string(p_b.size()) + ")");
  }
  if (M_A.size() != 2 * n || M_B.size() != 4 * n) {
    throw ConfigError("random strings must have lengths 2L and 4L");
  }
}

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ConfigError("bit string may only contain 0 and 1: '" + std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return out;
}

std::string format_bits(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace sqpc
