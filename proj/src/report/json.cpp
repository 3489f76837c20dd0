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

#include "sqpc/report/json.hpp"

namespace sqpc::report {

Json to_json(const ProtocolConfig& config) {
  return Json{{"L", config.L},
              {"sampling", std::string(to_string(config.sampling))},
              {"error_threshold", config.error_threshold},
              {"seed", config.seed}};
}

Json to_json(const ProtocolOutcome& outcome) {
  Json j;
  j["verdict"] = outcome.verdict ? Json(std::string(to_string(*outcome.verdict))) : Json(nullptr);
  j["per_bit_c"] = outcome.per_bit_c ? Json(format_bits(*outcome.per_bit_c)) : Json(nullptr);
  if (outcome.abort) {
    const auto& a = *outcome.abort;
    j["abort"] = Json{{"reason", a.reason == AbortReason::SecurityCheck ? "SECURITY_CHECK" : "INSUFFICIENT_SAMPLE"},
                      {"stage", std::string(to_string(a.stage))},
                      {"case", a.case_label},
                      {"observed_error_rate", a.observed_error_rate},
                      {"checked", a.checked},
                      {"failures", a.failures}};
  } else {
    j["abort"] = nullptr;
  }
  j["m_a"] = format_bits(outcome.m_a);
  j["m_b"] = format_bits(outcome.m_b);
  j["K"] = format_bits(outcome.K);
  Json checks = Json::array();
  for (const auto& c : outcome.checks) {
    checks.push_back(Json{{"case", c.case_label}, {"checked", c.checked}, {"failures", c.failures},
                          {"error_rate", c.error_rate()}});
  }
  j["checks"] = std::move(checks);
  const auto& r = outcome.resources;
  j["resources"] = Json{{"qubits_prepared", r.qubits_prepared()},
                        {"initial_qubits", r.initial_qubits},
                        {"fresh_s1", r.fresh_s1},
                        {"fresh_s3", r.fresh_s3},
                        {"classical_bits", r.classical_bits}};
  return j;
}

Json to_json(const analysis::DetectionEstimate& e) {
  Json cases = Json::array();
  for (int c = 0; c < 4; ++c) {
    cases.push_back(Json{{"case", c + 1}, {"episodes", e.case_episodes[c]}, {"detections", e.case_detections[c]}});
  }
  return Json{{"attack", e.attack},
              {"phase", std::string(to_string(e.phase))},
              {"episodes", e.episodes},
              {"detections", e.detections},
              {"per_unit_rate", e.per_unit_rate},
              {"stderr", e.stderr_},
              {"per_case", std::move(cases)},
              {"reference", e.reference ? Json(analysis::to_string(*e.reference)) : Json(nullptr)}};
}

Json to_json(const std::vector<analysis::EfficiencyRecord>& catalog) {
  Json rows = Json::array();
  for (const auto& r : catalog) {
    rows.push_back(Json{{"protocol_id", r.protocol_id},
                        {"label", r.label},
                        {"alpha", analysis::to_string(r.alpha) + "n"},
                        {"beta", analysis::to_string(r.beta) + "n"},
                        {"gamma", analysis::to_string(r.gamma) + "n"},
                        {"eta", analysis::to_string(r.eta)}});
  }
  return rows;
}

Json to_json(const analysis::IndependenceReport& r) {
  return Json{{"statistic", r.statistic},
              {"threshold", r.threshold},
              {"trials", r.trials},
              {"conclusion", r.pass ? "PASS" : "FAIL"},
              {"key_mb_correlation", r.key_mb_correlation},
              {"correlation_threshold", r.correlation_threshold},
              {"correlation_samples", r.correlation_samples},
              {"tp_z_matches_mb", r.tp_z_matches_mb},
              {"means", r.means}};
}

Json to_json(const analysis::VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"measured", c.measured},
                          {"expected", c.expected ? Json(*c.expected) : Json(nullptr)},
                          {"tolerance", c.tolerance},
                          {"detail", c.detail},
                          {"counted", c.counted}});
  }
  return Json{{"level", std::string(analysis::to_string(r.level))},
              {"reference", std::string(analysis::to_string(r.reference))},
              {"checks", std::move(checks)},
              {"pass", r.pass()}};
}

Json make_report(const std::string& command, std::uint64_t seed, Json config, Json result,
                 std::int64_t timing_ms) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"seed", seed},
              {"config", std::move(config)},
              {"result", std::move(result)},
              {"timing_ms", timing_ms}};
}

std::string strip_timing(const std::string& report_text) {
  Json j = Json::parse(report_text);
  j.erase("timing_ms");
  return j.dump(2);
}

}  // namespace sqpc::report
