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

#include "sqpc/protocol/postprocess.hpp"

#include <algorithm>
#include <string>

namespace sqpc {
namespace {

Bits xor_all(std::initializer_list<const Bits*> parts, const char* who) {
  const std::size_t n = (*parts.begin())->size();
  for (const Bits* p : parts) {
    if (p->size() != n) {
      throw std::invalid_argument(std::string(who) + ": length mismatch (" + std::to_string(n) +
                                  " vs " + std::to_string(p->size()) + ")");
    }
  }
  Bits out(n, 0);
  for (const Bits* p : parts) {
    for (std::size_t i = 0; i < n; ++i) out[i] ^= (*p)[i] & 1;
  }
  return out;
}

}  // namespace

Bits compute_g(const Bits& p_a, const Bits& K, const Bits& m_a) {
  return xor_all({&p_a, &K, &m_a}, "compute_g");
}

Bits compute_f(const Bits& p_b, const Bits& K, const Bits& m_b) {
  return xor_all({&p_b, &K, &m_b}, "compute_f");
}

Comparison tp_compare(const Bits& g, const Bits& f, const Bits& m_a, const Bits& m_b) {
  Bits c = xor_all({&g, &f, &m_a, &m_b}, "tp_compare");
  const bool equal = std::all_of(c.begin(), c.end(), [](auto b) { return b == 0; });
  return {std::move(c), equal ? Verdict::Equal : Verdict::NotEqual};
}

}  // namespace sqpc
