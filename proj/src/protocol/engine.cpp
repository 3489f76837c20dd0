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

#include "sqpc/protocol/engine.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "sqpc/protocol/position.hpp"
#include "sqpc/protocol/postprocess.hpp"
#include "sqpc/quantum/states.hpp"

namespace sqpc {

using quantum::StateVector;

RunStreams::RunStreams(std::uint64_t seed)
    : modes(derive_seed(seed, stream::kModes)),
      nature(derive_seed(seed, stream::kTp)),
      alice(derive_seed(seed, stream::kAlice)),
      bob(derive_seed(seed, stream::kBob)),
      eve(derive_seed(seed, stream::kEve)) {}

std::vector<StateVector> tp_prepare(int L, ResourceCounters& counters) {
  if (L < 1) throw ConfigError("tp_prepare: L must be at least 1");
  const auto n = static_cast<std::size_t>(12 * L);
  std::vector<StateVector> systems(n, quantum::prepare_chi00<double>());
  counters.initial_qubits += 4 * n;
  return systems;
}

namespace {

ModesS1 modes_for(CaseS1 c) {
  switch (c) {
    case CaseS1::C1: return {ModeS1::Reflect, ModeS1::Reflect};
    case CaseS1::C2: return {ModeS1::Measure, ModeS1::Measure};
    case CaseS1::C3: return {ModeS1::Reflect, ModeS1::Measure};
    case CaseS1::C4: return {ModeS1::Measure, ModeS1::Reflect};
  }
  return {};
}

ModesS3 modes_for(CaseS3 c, std::optional<PrepChoice> prep) {
  ModesS3 m;
  m.alice = (c == CaseS3::C3 || c == CaseS3::C4) ? AliceModeS3::Measure2 : AliceModeS3::Reflect;
  m.bob = (c == CaseS3::C2 || c == CaseS3::C4) ? BobModeS3::Measure2 : BobModeS3::Reflect;
  if (m.alice == AliceModeS3::Measure2) m.prep = prep;
  return m;
}

}  // namespace

ModeAssignment sample_modes(const ProtocolConfig& config, RandomSource& rng) {
  config.validate();
  const auto L = static_cast<std::size_t>(config.L);
  ModeAssignment out;
  if (config.sampling == Sampling::Quota) {
    for (auto c : {CaseS1::C1, CaseS1::C2, CaseS1::C3, CaseS1::C4}) {
      out.s1.insert(out.s1.end(), 2 * L, modes_for(c));
    }
    shuffle(out.s1, rng);
    out.s3.insert(out.s3.end(), L, modes_for(CaseS3::C1, std::nullopt));
    out.s3.insert(out.s3.end(), L, modes_for(CaseS3::C2, std::nullopt));
    for (auto c : {CaseS3::C3, CaseS3::C4}) {
      out.s3.insert(out.s3.end(), L / 2, modes_for(c, PrepChoice::FromMa));
      out.s3.insert(out.s3.end(), L / 2, modes_for(c, PrepChoice::AsFound));
    }
    shuffle(out.s3, rng);
    return out;
  }
  out.s1.resize(8 * L);
  for (auto& m : out.s1) {
    m.alice = rng.bit() ? ModeS1::Measure : ModeS1::Reflect;
    m.bob = rng.bit() ? ModeS1::Measure : ModeS1::Reflect;
  }
  out.s3.resize(4 * L);
  for (auto& m : out.s3) {
    m.alice = rng.bit() ? AliceModeS3::Measure2 : AliceModeS3::Reflect;
    m.bob = rng.bit() ? BobModeS3::Measure2 : BobModeS3::Reflect;
    if (m.alice == AliceModeS3::Measure2) m.prep = rng.bit() ? PrepChoice::FromMa : PrepChoice::AsFound;
  }
  return out;
}

RunContext::RunContext(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config,
                       Interceptor& channel_in)
    : streams(config.seed), channel(channel_in) {
  config.validate();
  run.config = config;
  const auto L = static_cast<std::size_t>(config.L);
  run.inputs.p_a = p_a;
  run.inputs.p_b = p_b;
  run.inputs.M_A.resize(2 * L);
  for (auto& b : run.inputs.M_A) b = static_cast<std::uint8_t>(streams.alice.bit());
  run.inputs.M_B.resize(4 * L);
  for (auto& b : run.inputs.M_B) b = static_cast<std::uint8_t>(streams.bob.bit());
  run.inputs.validate(config.L);
}

namespace {

Message table_message(Sender sender, Visibility vis, std::string topic,
                      const std::vector<std::size_t>& positions, const std::vector<int>& values) {
  return Message{sender, vis, std::move(topic), positions, values};
}

/// Which of a measuring party's first-phase results are announced for
/// checking. Quota: exactly L of the 2L, uniformly without replacement.
/// Bernoulli: an independent fair coin per position.
std::vector<std::size_t> choose_check_subset(const std::vector<std::size_t>& positions,
                                             const ProtocolConfig& config, RandomSource& rng) {
  std::vector<std::size_t> chosen;
  if (config.sampling == Sampling::Quota) {
    std::vector<std::size_t> pool = positions;
    shuffle(pool, rng);
    const auto want = std::min(pool.size(), static_cast<std::size_t>(config.L));
    chosen.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
    std::sort(chosen.begin(), chosen.end());
  } else {
    for (auto p : positions) {
      if (rng.bit()) chosen.push_back(p);
    }
  }
  return chosen;
}

bool apply_threshold(RunContext& ctx, Phase stage, const std::vector<CaseCheckStats>& stats) {
  auto& outcome = ctx.run.outcome;
  outcome.checks.insert(outcome.checks.end(), stats.begin(), stats.end());
  std::vector<std::size_t> idx;
  std::vector<int> failures;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    idx.push_back(i);
    failures.push_back(static_cast<int>(stats[i].failures));
  }
  ctx.run.transcript.append(table_message(Sender::Tp, Visibility::Public,
                                          std::string(to_string(stage)) + ".check_failures", idx,
                                          failures));
  for (const auto& s : stats) {
    if (s.error_rate() > ctx.run.config.error_threshold) {
      outcome.abort = Abort{AbortReason::SecurityCheck, stage, s.case_label, s.error_rate(), s.checked,
                            s.failures};
      return false;
    }
  }
  return true;
}

}  // namespace

bool run_s1_phase(RunContext& ctx) {
  auto& run = ctx.run;
  const auto L = static_cast<std::size_t>(run.config.L);
  const std::size_t n = 8 * L;
  if (run.modes.s1.size() != n || run.systems.size() != 12 * L) {
    throw std::logic_error("run_s1_phase: systems or modes not prepared");
  }
  run.s1.assign(n, {});
  std::vector<int> returned(n);

  // Steps 1-2: one particle in flight at a time.
  for (std::size_t i = 0; i < n; ++i) {
    auto& rec = run.s1[i];
    rec.position = i;
    rec.modes = run.modes.s1[i];
    ctx.channel.begin_position(Phase::S1, i, run.systems[i]);
    const auto t = transmit_s1_particle(run.systems[i], i, rec.modes, ctx.channel,
                                        ctx.streams.nature, ctx.streams.eve);
    rec.alice_result = t.alice_result;
    rec.bob_result = t.bob_result;
    returned[i] = t.returned;
    run.outcome.resources.fresh_s1 += (t.alice_result ? 1 : 0) + (t.bob_result ? 1 : 0);
  }

  // Step 3: modes are announced, TP measures what it stored.
  std::vector<std::size_t> all(n);
  std::vector<int> alice_modes(n), bob_modes(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = i;
    alice_modes[i] = run.s1[i].modes.alice == ModeS1::Measure;
    bob_modes[i] = run.s1[i].modes.bob == ModeS1::Measure;
  }
  run.transcript.append(table_message(Sender::Alice, Visibility::Public, "S1.alice_modes", all, alice_modes));
  run.transcript.append(table_message(Sender::Bob, Visibility::Public, "S1.bob_modes", all, bob_modes));

  const auto tp_alice = run.transcript.tp_table("S1.alice_modes");
  const auto tp_bob = run.transcript.tp_table("S1.bob_modes");
  std::array<std::vector<std::size_t>, 4> by_case;
  std::vector<TpReadingS1> readings(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CaseS1 c = classify_case_s1(tp_alice.at(i) ? ModeS1::Measure : ModeS1::Reflect,
                                      tp_bob.at(i) ? ModeS1::Measure : ModeS1::Reflect);
    auto& rec = run.s1[i];
    rec.case_ = c;
    by_case[static_cast<int>(c)].push_back(i);
    readings[i] = tp_measure_s1(run.systems[i], returned[i], c, ctx.streams.nature);
    rec.tp_fmb = readings[i].fmb;
    rec.tp_bell_34 = readings[i].bell34;
    rec.tp_z_s2 = readings[i].z_s2;
    rec.tp_z_result = readings[i].z_returned;
  }

  const auto& c2 = by_case[static_cast<int>(CaseS1::C2)];
  const auto& c3 = by_case[static_cast<int>(CaseS1::C3)];
  const auto& c4 = by_case[static_cast<int>(CaseS1::C4)];
  auto results_at = [&](const std::vector<std::size_t>& pos, bool alice) {
    std::vector<int> v;
    for (auto p : pos) v.push_back(alice ? *run.s1[p].alice_result : *run.s1[p].bob_result);
    return v;
  };
  run.transcript.append(table_message(Sender::Alice, Visibility::Public, "S1.C2.alice_results", c2, results_at(c2, true)));
  run.transcript.append(table_message(Sender::Bob, Visibility::Public, "S1.C2.bob_results", c2, results_at(c2, false)));
  const auto bob_checks = choose_check_subset(c3, run.config, ctx.streams.bob);
  const auto alice_checks = choose_check_subset(c4, run.config, ctx.streams.alice);
  run.transcript.append(table_message(Sender::Bob, Visibility::Public, "S1.C3.check", bob_checks, results_at(bob_checks, false)));
  run.transcript.append(table_message(Sender::Alice, Visibility::Public, "S1.C4.check", alice_checks, results_at(alice_checks, true)));

  // TP's verdict reads only announcements and its own readings.
  std::vector<CaseCheckStats> stats(4);
  for (int k = 0; k < 4; ++k) stats[k].case_label = std::string(to_string(static_cast<CaseS1>(k)));
  for (auto p : by_case[0]) {
    ++stats[0].checked;
    if (!check_s1_both_reflect(readings[p])) ++stats[0].failures;
  }
  const auto a2 = run.transcript.tp_table("S1.C2.alice_results");
  const auto b2 = run.transcript.tp_table("S1.C2.bob_results");
  for (auto p : c2) {
    ++stats[1].checked;
    if (!check_s1_both_measure(a2.at(p), b2.at(p), readings[p])) ++stats[1].failures;
  }
  for (const auto& [p, bit] : run.transcript.tp_table("S1.C3.check")) {
    ++stats[2].checked;
    if (!check_s1_announced(bit, readings[p])) ++stats[2].failures;
  }
  for (const auto& [p, bit] : run.transcript.tp_table("S1.C4.check")) {
    ++stats[3].checked;
    if (!check_s1_announced(bit, readings[p])) ++stats[3].failures;
  }

  for (auto p : by_case[0]) run.s1[p].used_for = Usage::Check;
  for (auto p : c2) run.s1[p].used_for = Usage::Check;
  // Unannounced results become the private halves, ascending, first L.
  auto harvest = [&](const std::vector<std::size_t>& pos, const std::vector<std::size_t>& checks,
                     bool alice, Bits& user, Bits& tp) {
    for (auto p : pos) {
      auto& rec = run.s1[p];
      if (std::binary_search(checks.begin(), checks.end(), p)) {
        rec.used_for = Usage::Check;
      } else if (user.size() < L) {
        rec.used_for = Usage::Private;
        user.push_back(static_cast<std::uint8_t>(alice ? *rec.alice_result : *rec.bob_result));
        tp.push_back(static_cast<std::uint8_t>(*rec.tp_z_result));
      } else {
        rec.used_for = Usage::Discarded;
      }
    }
  };
  harvest(c4, alice_checks, true, run.views.alice_m_a, run.views.tp_m_a);
  harvest(c3, bob_checks, false, run.views.bob_m_b, run.views.tp_m_b);
  run.s1_done = true;
  return apply_threshold(ctx, Phase::S1, stats);
}

bool run_s3_phase(RunContext& ctx) {
  auto& run = ctx.run;
  if (!run.s1_done) throw std::logic_error("run_s3_phase: first phase has not run");
  const auto L = static_cast<std::size_t>(run.config.L);
  const std::size_t n = 4 * L;
  const std::size_t base = 8 * L;
  run.s3.assign(n, {});
  std::vector<std::array<int, 2>> returned(n);

  std::size_t ma_cursor = 0, mb_cursor = 0;
  // Under Bernoulli sampling more than 2L (4L) bits can be needed; the
  // owner then extends the string with fresh coins.
  auto next_bits = [](Bits& string, std::size_t& cursor, RandomSource& owner) {
    std::array<std::size_t, 2> idx{};
    std::array<int, 2> bits{};
    for (int k = 0; k < 2; ++k) {
      if (cursor == string.size()) string.push_back(static_cast<std::uint8_t>(owner.bit()));
      idx[k] = cursor;
      bits[k] = string[cursor++];
    }
    return std::make_pair(idx, bits);
  };

  for (std::size_t i = 0; i < n; ++i) {
    auto& rec = run.s3[i];
    rec.position = i;
    rec.modes = run.modes.s3[i];
    std::optional<std::array<int, 2>> ma, mb;
    if (rec.modes.alice == AliceModeS3::Measure2 && rec.modes.prep == PrepChoice::FromMa) {
      auto [idx, bits] = next_bits(run.inputs.M_A, ma_cursor, ctx.streams.alice);
      rec.ma_bits_used = idx;
      ma = bits;
    }
    if (rec.modes.bob == BobModeS3::Measure2) {
      auto [idx, bits] = next_bits(run.inputs.M_B, mb_cursor, ctx.streams.bob);
      rec.mb_bits_used = idx;
      mb = bits;
    }
    auto& world = run.systems[base + i];
    ctx.channel.begin_position(Phase::S3, i, world);
    const auto t = transmit_s3_pair(world, i, rec.modes, ma, mb, ctx.channel, ctx.streams.nature,
                                    ctx.streams.eve);
    rec.alice_results = t.alice_results;
    rec.alice_prepared = t.alice_prepared;
    rec.bob_results = t.bob_results;
    rec.bob_prepared = t.bob_prepared;
    returned[i] = t.returned;
    run.outcome.resources.fresh_s3 += (t.alice_prepared ? 2 : 0) + (t.bob_prepared ? 2 : 0);
  }

  // Step 5.
  std::vector<std::size_t> all(n);
  std::vector<int> alice_modes(n), bob_modes(n);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = i;
    alice_modes[i] = run.s3[i].modes.alice == AliceModeS3::Measure2;
    bob_modes[i] = run.s3[i].modes.bob == BobModeS3::Measure2;
  }
  run.transcript.append(table_message(Sender::Alice, Visibility::Public, "S3.alice_modes", all, alice_modes));
  run.transcript.append(table_message(Sender::Bob, Visibility::Public, "S3.bob_modes", all, bob_modes));
  const auto tp_alice = run.transcript.tp_table("S3.alice_modes");
  const auto tp_bob = run.transcript.tp_table("S3.bob_modes");

  std::array<std::vector<std::size_t>, 4> by_case;
  std::vector<TpReadingS3> readings(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CaseS3 c = classify_case_s3(tp_alice.at(i) ? AliceModeS3::Measure2 : AliceModeS3::Reflect,
                                      tp_bob.at(i) ? BobModeS3::Measure2 : BobModeS3::Reflect);
    auto& rec = run.s3[i];
    rec.case_ = c;
    by_case[static_cast<int>(c)].push_back(i);
    readings[i] = tp_measure_s3(run.systems[base + i], returned[i], c, ctx.streams.nature);
    rec.tp_fmb = readings[i].fmb;
    rec.tp_bell_12 = readings[i].bell12;
    rec.tp_z_pair = readings[i].z_pair;
  }

  // Pair-valued announcements use qubit keys 2*pair + k.
  auto pair_table = [](const std::vector<std::size_t>& pairs, auto get) {
    std::pair<std::vector<std::size_t>, std::vector<int>> t;
    for (auto p : pairs) {
      const std::array<int, 2> v = get(p);
      for (int k = 0; k < 2; ++k) {
        t.first.push_back(2 * p + k);
        t.second.push_back(v[k]);
      }
    }
    return t;
  };
  auto announce = [&](Sender s, const char* topic, const std::vector<std::size_t>& pairs, auto get) {
    auto [pos, val] = pair_table(pairs, get);
    run.transcript.append(table_message(s, Visibility::Public, topic, pos, val));
  };
  const auto& c2 = by_case[static_cast<int>(CaseS3::C2)];
  const auto& c3 = by_case[static_cast<int>(CaseS3::C3)];
  const auto& c4 = by_case[static_cast<int>(CaseS3::C4)];
  std::vector<std::size_t> c4_as_found;
  for (auto p : c4) {
    if (run.s3[p].modes.prep == PrepChoice::AsFound) c4_as_found.push_back(p);
  }
  announce(Sender::Bob, "S3.C2.bob_results", c2, [&](auto p) { return *run.s3[p].bob_results; });
  announce(Sender::Bob, "S3.C2.bob_prepared", c2, [&](auto p) { return *run.s3[p].bob_prepared; });
  announce(Sender::Alice, "S3.C3.alice_results", c3, [&](auto p) { return *run.s3[p].alice_results; });
  announce(Sender::Alice, "S3.C4.alice_results", c4, [&](auto p) { return *run.s3[p].alice_results; });
  announce(Sender::Alice, "S3.C4.as_found", c4_as_found, [&](auto) { return std::array<int, 2>{1, 1}; });
  announce(Sender::Bob, "S3.C4.bob_prepared", c4, [&](auto p) { return *run.s3[p].bob_prepared; });
  announce(Sender::Bob, "S3.C4.as_found_bob_results", c4_as_found,
           [&](auto p) { return *run.s3[p].bob_results; });

  auto tp_pair = [&](const char* topic) {
    std::map<std::size_t, std::array<int, 2>> out;
    for (const auto& [q, v] : run.transcript.tp_table(topic)) out[q / 2][q % 2] = v;
    return out;
  };
  std::vector<CaseCheckStats> stats(4);
  for (int k = 0; k < 4; ++k) stats[k].case_label = std::string(to_string(static_cast<CaseS3>(k)));
  for (auto p : by_case[0]) {
    ++stats[0].checked;
    if (!check_s3_both_reflect(readings[p])) ++stats[0].failures;
  }
  const auto b2r = tp_pair("S3.C2.bob_results");
  const auto b2p = tp_pair("S3.C2.bob_prepared");
  for (auto p : c2) {
    ++stats[1].checked;
    if (!check_s3_bob_measures(b2r.at(p), b2p.at(p), readings[p])) ++stats[1].failures;
  }
  const auto a3 = tp_pair("S3.C3.alice_results");
  for (auto p : c3) {
    ++stats[2].checked;
    if (!check_s3_alice_measures(a3.at(p), readings[p])) ++stats[2].failures;
  }
  const auto a4 = tp_pair("S3.C4.alice_results");
  const auto b4p = tp_pair("S3.C4.bob_prepared");
  const auto b4f = tp_pair("S3.C4.as_found_bob_results");
  for (auto p : c4) {
    ++stats[3].checked;
    std::optional<std::array<int, 2>> found;
    if (auto it = b4f.find(p); it != b4f.end()) found = it->second;
    if (!check_s3_both_measure(a4.at(p), b4p.at(p), found, readings[p])) ++stats[3].failures;
  }

  // K: Alice's M_A bits sent through C4 pairs, Bob's Z results there.
  for (auto p : c4) {
    const auto& rec = run.s3[p];
    if (rec.modes.prep != PrepChoice::FromMa) continue;
    for (int k = 0; k < 2 && run.views.alice_K.size() < L; ++k) {
      run.views.alice_K.push_back(static_cast<std::uint8_t>((*rec.alice_prepared)[k]));
      run.views.bob_K.push_back(static_cast<std::uint8_t>((*rec.bob_results)[k]));
    }
  }
  run.s3_done = true;
  return apply_threshold(ctx, Phase::S3, stats);
}

void finish_protocol(RunContext& ctx) {
  auto& run = ctx.run;
  auto& out = run.outcome;
  const auto L = static_cast<std::size_t>(run.config.L);
  out.m_a = run.views.alice_m_a;
  out.m_b = run.views.bob_m_b;
  out.K = run.views.alice_K;

  auto shortfall = [&](Phase stage, const char* label, std::size_t have) {
    out.abort = Abort{AbortReason::InsufficientSample, stage, label,
                      static_cast<double>(have) / static_cast<double>(L), 0, 0};
  };
  if (run.views.alice_m_a.size() < L) return shortfall(Phase::S1, "C4", run.views.alice_m_a.size());
  if (run.views.bob_m_b.size() < L) return shortfall(Phase::S1, "C3", run.views.bob_m_b.size());
  if (run.views.alice_K.size() < L) return shortfall(Phase::S3, "C(4)", run.views.alice_K.size());

  run.views.g = compute_g(run.inputs.p_a, run.views.alice_K, run.views.alice_m_a);
  run.views.f = compute_f(run.inputs.p_b, run.views.bob_K, run.views.bob_m_b);
  std::vector<std::size_t> idx(L);
  for (std::size_t i = 0; i < L; ++i) idx[i] = i;
  auto as_ints = [](const Bits& b) { return std::vector<int>(b.begin(), b.end()); };
  run.transcript.append(table_message(Sender::Alice, Visibility::TpOnly, "g", idx, as_ints(run.views.g)));
  run.transcript.append(table_message(Sender::Bob, Visibility::TpOnly, "f", idx, as_ints(run.views.f)));
  out.resources.classical_bits += 2 * L;

  auto from_transcript = [&](const char* topic) {
    Bits b;
    for (const auto& [i, v] : run.transcript.tp_table(topic)) b.push_back(static_cast<std::uint8_t>(v));
    return b;
  };
  auto cmp = tp_compare(from_transcript("g"), from_transcript("f"), run.views.tp_m_a, run.views.tp_m_b);
  run.transcript.append(table_message(Sender::Tp, Visibility::Public, "c", idx, as_ints(cmp.c)));
  out.per_bit_c = std::move(cmp.c);
  out.verdict = cmp.verdict;
}

ProtocolRun run_protocol(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config,
                         Interceptor& channel, const std::optional<ModeAssignment>& forced_modes) {
  RunContext ctx(p_a, p_b, config, channel);
  ctx.run.systems = tp_prepare(config.L, ctx.run.outcome.resources);
  ctx.run.modes = forced_modes ? *forced_modes : sample_modes(config, ctx.streams.modes);
  const auto L = static_cast<std::size_t>(config.L);
  if (ctx.run.modes.s1.size() != 8 * L || ctx.run.modes.s3.size() != 4 * L) {
    throw ConfigError("mode assignment must cover 8L + 4L positions");
  }
  for (const auto& m : ctx.run.modes.s3) {
    if ((m.alice == AliceModeS3::Measure2) != m.prep.has_value()) {
      throw ConfigError("preparation choice must be present exactly for measuring Alice");
    }
  }
  if (run_s1_phase(ctx) && run_s3_phase(ctx)) finish_protocol(ctx);
  return std::move(ctx.run);
}

}  // namespace sqpc
