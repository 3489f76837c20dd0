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

#include "sqpc/analysis/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "sqpc/analysis/episodes.hpp"

namespace sqpc::analysis {
namespace {

constexpr std::size_t kChunk = 4096;

/// Runs fn(begin, end) over fixed chunks of [0, n) on a worker pool and
/// returns the per-chunk results in chunk order.
template <typename T, typename Fn>
std::vector<T> run_chunks(std::size_t n, unsigned threads, Fn fn) {
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<T> results(chunks);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
      results[c] = fn(c * kChunk, std::min(n, (c + 1) * kChunk));
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

struct Counts {
  std::size_t detections = 0;
  std::array<std::size_t, 4> case_episodes{};
  std::array<std::size_t, 4> case_detections{};
};

}  // namespace

bool within_sigma(double estimate, double reference, std::size_t n, double k) {
  const double se = std::sqrt(reference * (1.0 - reference) / static_cast<double>(n));
  return std::abs(estimate - reference) <= k * se;
}

DetectionEstimate detection_rate_mc(const adversary::AttackSpec& attack, Phase phase,
                                    std::size_t episodes, std::uint64_t seed, unsigned threads) {
  adversary::validate(attack);
  const auto parts = run_chunks<Counts>(episodes, threads, [&](std::size_t begin, std::size_t end) {
    Counts c;
    for (std::size_t i = begin; i < end; ++i) {
      SeededSource rng(derive_seed(seed, stream::kEpisode, i));
      const auto r = run_episode(attack, phase, rng);
      ++c.case_episodes[r.case_index];
      if (r.detected) {
        ++c.detections;
        ++c.case_detections[r.case_index];
      }
    }
    return c;
  });
  DetectionEstimate out;
  out.attack = adversary::describe(attack);
  out.phase = phase;
  out.episodes = episodes;
  for (const auto& c : parts) {
    out.detections += c.detections;
    for (int k = 0; k < 4; ++k) {
      out.case_episodes[k] += c.case_episodes[k];
      out.case_detections[k] += c.case_detections[k];
    }
  }
  if (episodes > 0) {
    out.per_unit_rate = static_cast<double>(out.detections) / static_cast<double>(episodes);
    out.stderr_ = std::sqrt(out.per_unit_rate * (1.0 - out.per_unit_rate) / static_cast<double>(episodes));
  }
  return out;
}

AbortEstimate abort_frequency(const adversary::AttackSpec& attack, int L, std::size_t runs,
                              std::uint64_t seed, Sampling sampling, unsigned threads) {
  adversary::validate(attack);
  struct Tally {
    std::size_t security = 0, shortfall = 0;
  };
  const auto parts = run_chunks<Tally>(runs, threads, [&](std::size_t begin, std::size_t end) {
    Tally t;
    for (std::size_t i = begin; i < end; ++i) {
      SeededSource inputs(derive_seed(seed, stream::kInputs, i));
      Bits p_a(static_cast<std::size_t>(L)), p_b(static_cast<std::size_t>(L));
      for (auto& b : p_a) b = static_cast<std::uint8_t>(inputs.bit());
      for (auto& b : p_b) b = static_cast<std::uint8_t>(inputs.bit());
      ProtocolConfig config;
      config.L = L;
      config.sampling = sampling;
      config.seed = derive_seed(seed, stream::kRun, i);
      const auto run = adversary::run_protocol(p_a, p_b, config, attack);
      if (run.outcome.abort) {
        if (run.outcome.abort->reason == AbortReason::SecurityCheck) {
          ++t.security;
        } else {
          ++t.shortfall;
        }
      }
    }
    return t;
  });
  AbortEstimate out;
  out.runs = runs;
  for (const auto& t : parts) {
    out.security_aborts += t.security;
    out.insufficient += t.shortfall;
  }
  if (runs > 0) {
    out.frequency = static_cast<double>(out.security_aborts) / static_cast<double>(runs);
    out.stderr_ = std::sqrt(out.frequency * (1.0 - out.frequency) / static_cast<double>(runs));
  }
  return out;
}

}  // namespace sqpc::analysis
