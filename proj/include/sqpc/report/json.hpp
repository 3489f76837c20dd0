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

#ifndef SQPC_REPORT_JSON_HPP
#define SQPC_REPORT_JSON_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "sqpc/analysis/efficiency.hpp"
#include "sqpc/analysis/estimators.hpp"
#include "sqpc/analysis/sweeps.hpp"
#include "sqpc/analysis/verification.hpp"
#include "sqpc/protocol/types.hpp"

namespace sqpc::report {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const ProtocolConfig& config);
Json to_json(const ProtocolOutcome& outcome);
Json to_json(const analysis::DetectionEstimate& estimate);
Json to_json(const std::vector<analysis::EfficiencyRecord>& catalog);
Json to_json(const analysis::IndependenceReport& report);
Json to_json(const analysis::VerificationReport& report);

/// Envelope shared by every command. Keys are emitted in sorted order so
/// the text is a pure function of the content.
Json make_report(const std::string& command, std::uint64_t seed, Json config, Json result,
                 std::int64_t timing_ms);

/// The report text without its timing field, for determinism checks.
std::string strip_timing(const std::string& report_text);

}  // namespace sqpc::report

#endif  // SQPC_REPORT_JSON_HPP
