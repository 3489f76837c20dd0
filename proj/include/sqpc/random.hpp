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

#ifndef SQPC_RANDOM_HPP
#define SQPC_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace sqpc {

/// Source of every random decision made during a simulation: party coin
/// flips, Eve's fake states and Born-rule measurement outcomes all go
/// through `choose`. Sampling and exact path enumeration are two
/// implementations of the same interface.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Picks an index with probability proportional to `weights[i]`.
  virtual std::size_t choose(std::span<const double> weights) = 0;

  virtual std::size_t uniform_index(std::size_t n) {
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    return choose(w);
  }

  int bit() { return static_cast<int>(uniform_index(2)); }
};

/// Mixes (master, stream, index) into an independent 64-bit seed
/// (SplitMix64 finalizer applied to each component in turn).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                    std::uint64_t index = 0) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(master) ^ stream) ^ index);
}

/// Stream tags for derive_seed.
namespace stream {
inline constexpr std::uint64_t kModes = 0x6d6f646573ULL;
inline constexpr std::uint64_t kTp = 0x7470ULL;
inline constexpr std::uint64_t kAlice = 0x616c696365ULL;
inline constexpr std::uint64_t kBob = 0x626f62ULL;
inline constexpr std::uint64_t kEve = 0x657665ULL;
inline constexpr std::uint64_t kInputs = 0x696e70757473ULL;
inline constexpr std::uint64_t kEpisode = 0x657069736f6465ULL;
inline constexpr std::uint64_t kRun = 0x72756eULL;
}  // namespace stream

class SeededSource final : public RandomSource {
 public:
  explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

  std::size_t choose(std::span<const double> weights) override {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = std::generate_canonical<double, 64>(engine_) * total;
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      last_nonzero = i;
      acc += weights[i];
      if (u < acc) return i;
    }
    return last_nonzero;
  }

  std::size_t uniform_index(std::size_t n) override {
    return static_cast<std::size_t>(engine_() % n);
  }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by a RandomSource.
template <typename T>
void shuffle(std::vector<T>& items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.uniform_index(i)]);
  }
}

}  // namespace sqpc

#endif  // SQPC_RANDOM_HPP
