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

#include "sqpc/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "sqpc/analysis/closed_form.hpp"
#include "sqpc/analysis/efficiency.hpp"
#include "sqpc/analysis/episodes.hpp"
#include "sqpc/analysis/estimators.hpp"
#include "sqpc/analysis/verification.hpp"
#include "sqpc/protocol/engine.hpp"
#include "sqpc/report/json.hpp"

namespace sqpc::cli {

using report::Json;

namespace {

Phase parse_phase(const std::string& phase) {
  if (phase == "s1") return Phase::S1;
  if (phase == "s3") return Phase::S3;
  throw ConfigError("phase must be s1 or s3, got '" + phase + "'");
}

analysis::Reference parse_reference(const std::string& r) {
  if (r == "published") return analysis::Reference::Published;
  if (r == "oracle") return analysis::Reference::Oracle;
  throw ConfigError("reference must be published or oracle, got '" + r + "'");
}

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct OutputFlags {
  bool json = false;
  bool pretty = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  auto* j = cmd->add_flag("--json", flags.json, "Machine-readable report (default)");
  cmd->add_flag("--pretty", flags.pretty, "Human-readable table")->excludes(j);
}

struct RunArgs {
  int L = 4;
  std::string pa, pb;
  std::string sampling = "quota";
  std::string attack = "none";
  std::string attack_phase = "s1";
  double threshold = 0.0;
  std::uint64_t seed = 1;
  OutputFlags output;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  ProtocolConfig config;
  config.L = a.L;
  config.seed = a.seed;
  config.error_threshold = a.threshold;
  if (a.sampling == "quota") {
    config.sampling = Sampling::Quota;
  } else if (a.sampling == "bernoulli") {
    config.sampling = Sampling::Bernoulli;
  } else {
    throw ConfigError("sampling must be quota or bernoulli");
  }
  const Bits p_a = parse_bits(a.pa), p_b = parse_bits(a.pb);
  if (p_a.size() != static_cast<std::size_t>(a.L) || p_b.size() != static_cast<std::size_t>(a.L)) {
    throw ConfigError("--pa and --pb must both have exactly L = " + std::to_string(a.L) + " bits");
  }
  const auto attack = parse_attack(a.attack, a.attack_phase);
  const auto run = adversary::run_protocol(p_a, p_b, config, attack);
  const auto& o = run.outcome;
  Json cfg = report::to_json(config);
  cfg["attack"] = adversary::describe(attack);
  if (a.output.pretty) {
    out << "L=" << a.L << " sampling=" << to_string(config.sampling) << " seed=" << a.seed
        << " attack=" << adversary::describe(attack) << "\n";
    for (const auto& c : o.checks) {
      out << "  check " << std::setw(5) << std::left << c.case_label << std::right << " checked "
          << std::setw(4) << c.checked << "  failures " << std::setw(4) << c.failures << "\n";
    }
    if (o.verdict) {
      out << "verdict " << to_string(*o.verdict) << "  c=" << format_bits(*o.per_bit_c) << "\n";
    } else {
      out << "aborted: "
          << (o.abort->reason == AbortReason::SecurityCheck ? "security check failed" : "insufficient sample")
          << " in " << to_string(o.abort->stage) << " " << o.abort->case_label << " (error rate "
          << o.abort->observed_error_rate << ")\n";
    }
    out << "qubits prepared " << o.resources.qubits_prepared() << ", classical bits "
        << o.resources.classical_bits << "\n";
  } else {
    out << report::make_report("run", a.seed, std::move(cfg), report::to_json(o), elapsed_ms(start)).dump(2)
        << "\n";
  }
  if (o.completed()) return kExitOk;
  return o.abort->reason == AbortReason::SecurityCheck ? kExitAborted : kExitUsage;
}

struct AttackArgs {
  std::string type;
  std::string phase = "s1";
  std::size_t episodes = 100'000;
  int L = 1;
  std::uint64_t seed = 1;
  std::string reference = "published";
  double theta = 0.3, phi = 1.1;
  OutputFlags output;
};

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  if (a.episodes < 1000) throw ConfigError("--episodes must be at least 1000");
  if (a.L < 1) throw ConfigError("--L must be at least 1");
  const Phase phase = parse_phase(a.phase);
  const auto ref_kind = parse_reference(a.reference);
  const auto attack = parse_attack(a.type, a.phase, a.theta, a.phi);
  auto est = analysis::detection_rate_mc(attack, phase, a.episodes, a.seed);

  Json result = report::to_json(est);
  std::optional<double> reference;
  if (a.type.rfind("ir", 0) == 0 || a.type.rfind("mr", 0) == 0) {
    // Measure-resend has no published figure; it is compared to the oracle.
    const auto kind = a.type.rfind("mr", 0) == 0 ? analysis::Reference::Oracle : ref_kind;
    const auto cf = analysis::detection_closed_form(attack, a.L, kind);
    est.reference = cf.per_unit;
    reference = static_cast<double>(cf.per_unit.numerator()) / static_cast<double>(cf.per_unit.denominator());
    result["reference"] = analysis::to_string(cf.per_unit);
    result["reference_kind"] = std::string(analysis::to_string(kind));
    result["overall_reference"] = static_cast<double>(cf.overall);
  } else if (a.type == "em-cnot") {
    // Copying Z into the probe is Z-dephasing of the particle, so only the
    // both-reflect quarter can fail.
    reference = analysis::dephased_mismatch_probability(Phase::S1) / 4.0;
    result["reference"] = *reference;
    result["reference_kind"] = "oracle";
    result["leakage_fidelity"] = Json{{"m_a", analysis::exact_probe_fidelity(attack, analysis::Secret::MA)},
                                      {"m_b", analysis::exact_probe_fidelity(attack, analysis::Secret::MB)}};
  } else if (a.type == "em-constrained") {
    reference = 0.0;
    result["reference"] = "0";
    result["reference_kind"] = "exact";
    if (phase == Phase::S1) {
      result["leakage_fidelity"] = Json{{"m_a", analysis::exact_probe_fidelity(attack, analysis::Secret::MA)},
                                        {"m_b", analysis::exact_probe_fidelity(attack, analysis::Secret::MB)}};
    } else {
      result["leakage_fidelity"] = Json{{"K", analysis::exact_probe_fidelity(attack, analysis::Secret::K)}};
    }
  }
  const bool pass = !reference || analysis::within_sigma(est.per_unit_rate, *reference, a.episodes);
  result["within_3_sigma"] = reference ? Json(pass ? "PASS" : "FAIL") : Json(nullptr);

  Json cfg{{"type", a.type}, {"phase", a.phase}, {"episodes", a.episodes}, {"L", a.L},
           {"reference", a.reference}};
  if (a.output.pretty) {
    out << adversary::describe(attack) << ": " << est.detections << "/" << est.episodes << " = "
        << std::setprecision(6) << est.per_unit_rate << " +- " << est.stderr_;
    if (reference) out << "  reference " << result["reference"].dump() << "  " << (pass ? "PASS" : "FAIL");
    out << "\n";
    for (int c = 0; c < 4; ++c) {
      out << "  case " << c + 1 << ": " << est.case_detections[c] << "/" << est.case_episodes[c] << "\n";
    }
    if (result.contains("leakage_fidelity")) out << "  leakage fidelity " << result["leakage_fidelity"].dump() << "\n";
  } else {
    out << report::make_report("attack", a.seed, std::move(cfg), std::move(result), elapsed_ms(start)).dump(2)
        << "\n";
  }
  return kExitOk;
}

int cmd_efficiency(const OutputFlags& flags, std::ostream& out) {
  const auto start = Clock::now();
  const auto catalog = analysis::efficiency_catalog();
  if (flags.pretty) {
    out << std::left << std::setw(14) << "protocol" << std::setw(8) << "alpha" << std::setw(8) << "beta"
        << std::setw(8) << "gamma" << "eta\n";
    for (const auto& r : catalog) {
      out << std::setw(14) << r.label << std::setw(8) << analysis::to_string(r.alpha) + "n" << std::setw(8)
          << analysis::to_string(r.beta) + "n" << std::setw(8) << analysis::to_string(r.gamma) + "n"
          << analysis::to_string(r.eta) << "\n";
    }
  } else {
    out << report::make_report("efficiency", 0, Json::object(), report::to_json(catalog), elapsed_ms(start)).dump(2)
        << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string level = "quick";
  std::uint64_t seed = 42;
  std::string reference = "published";
  OutputFlags output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  analysis::Level level;
  if (a.level == "quick") {
    level = analysis::Level::Quick;
  } else if (a.level == "full") {
    level = analysis::Level::Full;
  } else {
    throw ConfigError("level must be quick or full");
  }
  const auto rep = analysis::run_verification(level, a.seed, parse_reference(a.reference));
  if (a.output.pretty) {
    for (const auto& c : rep.checks) {
      out << (c.pass ? "PASS " : c.counted ? "FAIL " : "NOTE ") << std::left << std::setw(42) << c.name << std::right
          << " measured " << std::setprecision(6) << c.measured;
      if (c.expected) out << "  expected " << *c.expected;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << (rep.pass() ? "all checks passed" : "some checks failed") << "\n";
  } else {
    Json cfg{{"level", a.level}, {"reference", a.reference}};
    out << report::make_report("verify", a.seed, std::move(cfg), report::to_json(rep), elapsed_ms(start)).dump(2)
        << "\n";
  }
  return rep.pass() ? kExitOk : kExitAborted;
}

}  // namespace

adversary::AttackSpec parse_attack(const std::string& type, const std::string& phase_text, double theta,
                                   double phi) {
  const Phase phase = parse_phase(phase_text);
  if (type == "none") return adversary::NoAttack{};
  if (type == "ir1" || type == "ir2" || type == "ir3") {
    return adversary::InterceptResend{type[2] - '0', phase};
  }
  if (type == "mr-leg1" || type == "mr-leg2" || type == "mr-leg3") {
    static constexpr Leg legs[] = {Leg::TpToAlice, Leg::AliceToBob, Leg::BobToTp};
    return adversary::MeasureResend{legs[type.back() - '1'], phase};
  }
  if (type == "em-constrained") {
    adversary::EntangleMeasure em;
    em.u_first = adversary::build_constrained_ue(theta, theta);
    em.u_second = adversary::build_constrained_ue(phi, phi);
    em.phase = phase;
    return em;
  }
  if (type == "em-cnot") {
    if (phase != Phase::S1) throw ConfigError("em-cnot acts on single particles; use --phase s1");
    adversary::EntangleMeasure em;
    em.u_first = adversary::build_cnot_probe();
    em.phase = phase;
    return em;
  }
  throw ConfigError("unknown attack type '" + type + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiquantum private comparison simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Execute the protocol once");
  run->add_option("--L", run_args.L, "Private input length")->required();
  run->add_option("--pa", run_args.pa, "Alice's input bits")->required();
  run->add_option("--pb", run_args.pb, "Bob's input bits")->required();
  run->add_option("--sampling", run_args.sampling, "quota | bernoulli");
  run->add_option("--attack", run_args.attack, "Attack type, as for the attack command");
  run->add_option("--attack-phase", run_args.attack_phase, "s1 | s3");
  run->add_option("--threshold", run_args.threshold, "Tolerated check error rate");
  run->add_option("--seed", run_args.seed, "Master seed");
  add_output_flags(run, run_args.output);

  AttackArgs attack_args;
  auto* attack = app.add_subcommand("attack", "Estimate the detection rate of an attack");
  attack->add_option("--type", attack_args.type,
                     "ir1|ir2|ir3|mr-leg1|mr-leg2|mr-leg3|em-constrained|em-cnot")->required();
  attack->add_option("--phase", attack_args.phase, "s1 | s3");
  attack->add_option("--episodes", attack_args.episodes, "Single-position episodes");
  attack->add_option("--L", attack_args.L, "Input length for the overall probability");
  attack->add_option("--seed", attack_args.seed, "Master seed");
  attack->add_option("--reference", attack_args.reference, "published | oracle");
  attack->add_option("--theta", attack_args.theta, "First probe angle (em-constrained)");
  attack->add_option("--phi", attack_args.phi, "Second probe angle (em-constrained)");
  add_output_flags(attack, attack_args.output);

  OutputFlags efficiency_flags;
  auto* efficiency = app.add_subcommand("efficiency", "Qubit efficiency catalog");
  add_output_flags(efficiency, efficiency_flags);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--level", verify_args.level, "quick | full");
  verify->add_option("--seed", verify_args.seed, "Master seed");
  verify->add_option("--reference", verify_args.reference, "published | oracle");
  add_output_flags(verify, verify_args.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_args, out);
    if (attack->parsed()) return cmd_attack(attack_args, out);
    if (efficiency->parsed()) return cmd_efficiency(efficiency_flags, out);
    if (verify->parsed()) return cmd_verify(verify_args, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sqpc::cli
