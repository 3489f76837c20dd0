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

#include <cmath>
#include <stdexcept>

#include "sqpc/analysis/sweeps.hpp"
#include "sqpc/protocol/engine.hpp"

namespace sqpc::analysis {

IndependenceReport tp_ignorance_test(int L, int trials, std::uint64_t seed) {
  if (L < 2 || L > 16) throw std::invalid_argument("tp_ignorance_test: L must lie in [2, 16]");
  if (trials < 1) throw std::invalid_argument("tp_ignorance_test: trials must be positive");
  IndependenceReport out;
  out.trials = static_cast<std::size_t>(trials);
  out.threshold = 3.0 * 0.5 / std::sqrt(static_cast<double>(trials));

  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  std::size_t n = 0;
  std::uint64_t index = 0;
  PassiveChannel honest;
  const Bits p_b(static_cast<std::size_t>(L), 0);
  for (unsigned value = 0; value < (1u << L); ++value) {
    Bits p_a(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) p_a[i] = static_cast<std::uint8_t>((value >> (L - 1 - i)) & 1u);
    std::vector<std::size_t> ones(static_cast<std::size_t>(L), 0);
    for (int t = 0; t < trials; ++t) {
      ProtocolConfig config;
      config.L = L;
      config.seed = derive_seed(seed, stream::kRun, index++);
      const auto run = run_protocol(p_a, p_b, config, honest);
      if (!run.outcome.completed()) throw std::logic_error("honest quota run aborted");
      // All TP can form about p_a: its g together with the m_a it deduced.
      for (int i = 0; i < L; ++i) ones[i] += run.views.g[i] ^ run.views.tp_m_a[i];
      for (const auto& rec : run.s3) {
        if (rec.case_ != CaseS3::C4 || rec.modes.prep != PrepChoice::FromMa) continue;
        for (int k = 0; k < 2; ++k) {
          const double x = (*rec.alice_prepared)[k];
          const double y = (*rec.tp_z_pair)[k];
          if ((*rec.tp_z_pair)[k] != (*rec.bob_prepared)[k]) out.tp_z_matches_mb = false;
          sx += x;
          sy += y;
          sxx += x * x;
          syy += y * y;
          sxy += x * y;
          ++n;
        }
      }
    }
    for (int i = 0; i < L; ++i) {
      const double mean = static_cast<double>(ones[i]) / trials;
      out.means.push_back(mean);
      out.statistic = std::max(out.statistic, std::abs(mean - 0.5));
    }
  }
  out.correlation_samples = n;
  const double dn = static_cast<double>(n);
  const double cov = sxy / dn - (sx / dn) * (sy / dn);
  const double vx = sxx / dn - (sx / dn) * (sx / dn);
  const double vy = syy / dn - (sy / dn) * (sy / dn);
  out.key_mb_correlation = (vx > 0 && vy > 0) ? cov / std::sqrt(vx * vy) : 0.0;
  out.correlation_threshold = 3.0 / std::sqrt(dn);
  out.pass = out.statistic <= out.threshold && std::abs(out.key_mb_correlation) <= out.correlation_threshold &&
             out.tp_z_matches_mb;
  return out;
}

}  // namespace sqpc::analysis
