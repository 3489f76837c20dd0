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

#ifndef SQPC_ANALYSIS_REPLAY_HPP
#define SQPC_ANALYSIS_REPLAY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqpc/random.hpp"

namespace sqpc::analysis {

/// RandomSource that follows a prescribed prefix of choices and takes the
/// first possible branch afterwards, multiplying up the probability of the
/// path it walked. Driving the ordinary episode code with it once per path
/// turns a sampler into an exact enumerator.
class ReplaySource final : public RandomSource {
 public:
  explicit ReplaySource(std::vector<std::size_t> prefix = {}) : prefix_(std::move(prefix)) {}

  std::size_t choose(std::span<const double> weights) override {
    double total = 0.0;
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] > 0.0) {
        total += weights[i];
        live.push_back(i);
      }
    }
    if (live.empty()) throw std::logic_error("ReplaySource: all weights are zero");
    const std::size_t depth = taken_.size();
    const std::size_t pick = depth < prefix_.size() ? prefix_[depth] : live.front();
    if (pick >= weights.size() || weights[pick] <= 0.0) {
      throw std::logic_error("ReplaySource: replayed choice is no longer possible");
    }
    probability_ *= weights[pick] / total;
    taken_.push_back(pick);
    live_.push_back(std::move(live));
    return pick;
  }

  double probability() const { return probability_; }

  /// Prefix of the lexicographically next path, or nothing when this was
  /// the last one.
  std::optional<std::vector<std::size_t>> next_prefix() const {
    for (std::size_t d = taken_.size(); d-- > 0;) {
      const auto& live = live_[d];
      for (std::size_t k = 0; k + 1 < live.size(); ++k) {
        if (live[k] == taken_[d]) {
          std::vector<std::size_t> next(taken_.begin(), taken_.begin() + static_cast<std::ptrdiff_t>(d));
          next.push_back(live[k + 1]);
          return next;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<std::size_t> prefix_;
  std::vector<std::size_t> taken_;
  std::vector<std::vector<std::size_t>> live_;
  double probability_ = 1.0;
};

/// Runs `body(rng)` once per distinct path of random choices and hands
/// each result to `visit(result, probability)`. Returns the path count.
template <typename Body, typename Visit>
std::size_t enumerate_paths(Body&& body, Visit&& visit, std::size_t max_paths = 10'000'000) {
  std::optional<std::vector<std::size_t>> prefix = std::vector<std::size_t>{};
  std::size_t paths = 0;
  while (prefix) {
    if (++paths > max_paths) throw std::runtime_error("enumerate_paths: too many paths");
    ReplaySource rng(std::move(*prefix));
    auto result = body(static_cast<RandomSource&>(rng));
    visit(result, rng.probability());
    prefix = rng.next_prefix();
  }
  return paths;
}

}  // namespace sqpc::analysis

#endif  // SQPC_ANALYSIS_REPLAY_HPP
