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

#include "sqpc/analysis/episodes.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqpc/adversary/leakage.hpp"
#include "sqpc/analysis/replay.hpp"
#include "sqpc/protocol/position.hpp"

namespace sqpc::analysis {

using adversary::AttackSpec;

namespace {

void take_snapshot(const Interceptor& channel, EpisodeResult& out) {
  if (const auto* em = dynamic_cast<const adversary::EntangleMeasureChannel*>(&channel)) {
    out.probe = em->probe_snapshot();
  }
}

EpisodeResult s1_episode(Interceptor& channel, RandomSource& rng) {
  EpisodeResult out;
  out.phase = Phase::S1;
  ModesS1 modes;
  modes.alice = rng.bit() ? ModeS1::Measure : ModeS1::Reflect;
  modes.bob = rng.bit() ? ModeS1::Measure : ModeS1::Reflect;
  const CaseS1 c = classify_case_s1(modes.alice, modes.bob);
  out.case_index = static_cast<int>(c);
  out.checked = true;
  if (c == CaseS1::C3 || c == CaseS1::C4) out.checked = rng.bit() == 1;

  auto world = quantum::prepare_chi00<double>();
  channel.begin_position(Phase::S1, 0, world);
  const auto t = transmit_s1_particle(world, 0, modes, channel, rng, rng);
  take_snapshot(channel, out);

  if (!out.checked) {
    if (c == CaseS1::C4) out.m_a = t.alice_result;
    if (c == CaseS1::C3) out.m_b = t.bob_result;
    return out;
  }
  const auto r = tp_measure_s1(world, t.returned, c, rng);
  switch (c) {
    case CaseS1::C1: out.detected = !check_s1_both_reflect(r); break;
    case CaseS1::C2: out.detected = !check_s1_both_measure(*t.alice_result, *t.bob_result, r); break;
    case CaseS1::C3: out.detected = !check_s1_announced(*t.bob_result, r); break;
    case CaseS1::C4: out.detected = !check_s1_announced(*t.alice_result, r); break;
  }
  return out;
}

EpisodeResult s3_episode(Interceptor& channel, RandomSource& rng) {
  EpisodeResult out;
  out.phase = Phase::S3;
  out.checked = true;
  ModesS3 modes;
  modes.alice = rng.bit() ? AliceModeS3::Measure2 : AliceModeS3::Reflect;
  if (modes.alice == AliceModeS3::Measure2) modes.prep = rng.bit() ? PrepChoice::FromMa : PrepChoice::AsFound;
  modes.bob = rng.bit() ? BobModeS3::Measure2 : BobModeS3::Reflect;
  const CaseS3 c = classify_case_s3(modes.alice, modes.bob);
  out.case_index = static_cast<int>(c);

  std::optional<std::array<int, 2>> ma, mb;
  if (modes.prep == PrepChoice::FromMa) ma = std::array<int, 2>{rng.bit(), rng.bit()};
  if (modes.bob == BobModeS3::Measure2) mb = std::array<int, 2>{rng.bit(), rng.bit()};

  auto world = quantum::prepare_chi00<double>();
  channel.begin_position(Phase::S3, 0, world);
  const auto t = transmit_s3_pair(world, 0, modes, ma, mb, channel, rng, rng);
  take_snapshot(channel, out);
  if (c == CaseS3::C4 && modes.prep == PrepChoice::FromMa) {
    out.k = {(*t.alice_prepared)[0], (*t.alice_prepared)[1]};
  }

  const auto r = tp_measure_s3(world, t.returned, c, rng);
  switch (c) {
    case CaseS3::C1: out.detected = !check_s3_both_reflect(r); break;
    case CaseS3::C2: out.detected = !check_s3_bob_measures(*t.bob_results, *t.bob_prepared, r); break;
    case CaseS3::C3: out.detected = !check_s3_alice_measures(*t.alice_results, r); break;
    case CaseS3::C4: {
      std::optional<std::array<int, 2>> found;
      if (modes.prep == PrepChoice::AsFound) found = t.bob_results;
      out.detected = !check_s3_both_measure(*t.alice_results, *t.bob_prepared, found, r);
      break;
    }
  }
  return out;
}

Phase attack_phase(const AttackSpec& attack) {
  return std::visit(
      [](const auto& a) -> Phase {
        if constexpr (requires { a.phase; }) {
          return a.phase;
        } else {
          throw std::invalid_argument("attack has no phase");
        }
      },
      attack);
}

}  // namespace

EpisodeResult run_episode(const AttackSpec& attack, Phase phase, RandomSource& rng) {
  auto channel = adversary::make_interceptor(attack);
  return phase == Phase::S1 ? s1_episode(*channel, rng) : s3_episode(*channel, rng);
}

ExactDetection exact_detection(const AttackSpec& attack, Phase phase) {
  ExactDetection out;
  std::array<double, 4> case_weight{};
  out.paths = enumerate_paths([&](RandomSource& rng) { return run_episode(attack, phase, rng); },
                              [&](const EpisodeResult& r, double p) {
                                case_weight[r.case_index] += p;
                                if (r.detected) {
                                  out.per_unit += p;
                                  out.per_case[r.case_index] += p;
                                }
                              });
  for (int c = 0; c < 4; ++c) {
    if (case_weight[c] > 0) out.per_case[c] /= case_weight[c];
  }
  return out;
}

std::string_view to_string(Secret s) {
  switch (s) {
    case Secret::MA: return "m_a";
    case Secret::MB: return "m_b";
    case Secret::K: return "K";
  }
  return "?";
}

double exact_probe_fidelity(const AttackSpec& attack, Secret secret) {
  if (!std::holds_alternative<adversary::EntangleMeasure>(attack)) {
    throw std::invalid_argument("probe fidelity needs an entangle-measure attack");
  }
  const Phase phase = secret == Secret::K ? Phase::S3 : Phase::S1;
  if (attack_phase(attack) != phase) {
    throw std::invalid_argument("attack does not touch the phase that carries " + std::string(to_string(secret)));
  }
  std::array<adversary::ProbeLedger, 2> ledgers;
  enumerate_paths([&](RandomSource& rng) { return run_episode(attack, phase, rng); },
                  [&](const EpisodeResult& r, double p) {
                    if (!r.probe) return;
                    if (secret == Secret::MA && r.m_a) ledgers[0].add(*r.m_a, *r.probe, p);
                    if (secret == Secret::MB && r.m_b) ledgers[0].add(*r.m_b, *r.probe, p);
                    if (secret == Secret::K) {
                      for (int k = 0; k < 2; ++k) {
                        if (r.k[k]) ledgers[k].add(*r.k[k], *r.probe, p);
                      }
                    }
                  });
  double f = ledgers[0].probe_distinguishability();
  if (secret == Secret::K) f = std::min(f, ledgers[1].probe_distinguishability());
  return f;
}

}  // namespace sqpc::analysis
