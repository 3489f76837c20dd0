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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "sqpc/analysis/efficiency.hpp"
#include "sqpc/cli/commands.hpp"
#include "sqpc/protocol/engine.hpp"
#include "sqpc/report/json.hpp"

namespace sqpc {
namespace {

using analysis::Fraction;
using report::Json;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sqpc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Efficiency, CatalogIsExact) {
  const Fraction expected[] = {Fraction(1, 66), Fraction(1, 82), Fraction(1, 60), Fraction(1, 10),
                               Fraction(1, 32), Fraction(1, 48), Fraction(1, 36), Fraction(1, 58),
                               Fraction(1, 42), Fraction(1, 70)};
  const auto catalog = analysis::efficiency_catalog();
  ASSERT_EQ(catalog.size(), std::size(expected));
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    EXPECT_TRUE(catalog[i].eta == expected[i]) << catalog[i].label;
  }
  EXPECT_EQ(catalog.front().protocol_id, "this");
}

TEST(Efficiency, ZeroDenominatorThrows) {
  EXPECT_THROW(analysis::qubit_efficiency(Fraction(1), Fraction(0), Fraction(0)), std::invalid_argument);
  EXPECT_TRUE(analysis::qubit_efficiency(Fraction(1), Fraction(8), Fraction(2)) == Fraction(1, 10));
}

TEST(Efficiency, AuditOfAnHonestRun) {
  ProtocolConfig config;
  config.L = 4;
  config.seed = 2;
  PassiveChannel channel;
  const auto run = run_protocol(parse_bits("0000"), parse_bits("0001"), config, channel);
  const auto audit = analysis::resource_audit(run.outcome, 4);
  EXPECT_TRUE(audit.match);
  EXPECT_EQ(audit.beta_observed, 256u);
  EXPECT_EQ(audit.gamma_observed, 8u);
}

TEST(Report, EnvelopeAndTimingStrip) {
  const auto j = report::make_report("efficiency", 3, Json::object(), Json::array(), 17);
  EXPECT_EQ(j["schema_version"], report::kSchemaVersion);
  EXPECT_EQ(j["timing_ms"], 17);
  const auto stripped = Json::parse(report::strip_timing(j.dump()));
  EXPECT_FALSE(stripped.contains("timing_ms"));
  EXPECT_EQ(stripped["command"], "efficiency");
}

TEST(Cli, RunHonest) {
  const auto r = cli({"run", "--L", "4", "--pa", "1010", "--pb", "1001", "--seed", "5"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "run");
  EXPECT_EQ(j["result"]["per_bit_c"], "0011");
  EXPECT_EQ(j["result"]["verdict"], "NOT_EQUAL");
  EXPECT_EQ(j["result"]["resources"]["qubits_prepared"], 256);
}

TEST(Cli, RunUnderAttackAborts) {
  const auto r = cli({"run", "--L", "4", "--pa", "1010", "--pb", "1010", "--attack", "ir2", "--seed", "1"});
  EXPECT_EQ(r.code, cli::kExitAborted);
  EXPECT_EQ(Json::parse(r.out)["result"]["abort"]["reason"], "SECURITY_CHECK");
}

TEST(Cli, InsufficientSampleExitsWithOne) {
  std::set<int> codes;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto r = cli({"run", "--L", "1", "--pa", "1", "--pb", "0", "--sampling", "bernoulli", "--seed",
                        std::to_string(seed)});
    const auto j = Json::parse(r.out);
    if (j["result"]["abort"].is_null()) {
      EXPECT_EQ(r.code, cli::kExitOk);
    } else {
      EXPECT_EQ(j["result"]["abort"]["reason"], "INSUFFICIENT_SAMPLE");
      EXPECT_EQ(r.code, cli::kExitUsage);
    }
    codes.insert(r.code);
  }
  EXPECT_EQ(codes.size(), 2u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({"run", "--L", "4", "--pa", "101", "--pb", "1010"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({"run", "--L", "3", "--pa", "101", "--pb", "101"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({"attack", "--type", "ir1", "--episodes", "999"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({"attack", "--type", "bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({"attack", "--type", "em-cnot", "--phase", "s3", "--episodes", "1000"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({"verify", "--level", "medium"}).code, cli::kExitUsage);
  EXPECT_EQ(cli({}).code, cli::kExitUsage);
}

TEST(Cli, AttackReport) {
  const auto r = cli({"attack", "--type", "ir1", "--phase", "s1", "--episodes", "20000", "--seed", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = Json::parse(r.out)["result"];
  EXPECT_EQ(j["reference"], "3/16");
  EXPECT_EQ(j["within_3_sigma"], "PASS");
  EXPECT_EQ(j["episodes"], 20000);
}

TEST(Cli, EfficiencyReport) {
  const auto r = cli({"efficiency"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto rows = Json::parse(r.out)["result"];
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0]["eta"], "1/66");
  EXPECT_EQ(rows[9]["eta"], "1/70");
  EXPECT_EQ(rows[4]["label"], "Ref.[27] #2");
}

TEST(Cli, QuickVerifyPassesAndRepeats) {
  const auto a = cli({"verify", "--seed", "42"});
  const auto b = cli({"verify", "--seed", "42"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(report::strip_timing(a.out), report::strip_timing(b.out));
}

TEST(Cli, PrettyOutput) {
  const auto r = cli({"efficiency", "--pretty"});
  EXPECT_NE(r.out.find("1/66"), std::string::npos);
  EXPECT_EQ(cli({"efficiency", "--pretty", "--json"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace sqpc
