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

#ifndef SQPC_PROTOCOL_POSTPROCESS_HPP
#define SQPC_PROTOCOL_POSTPROCESS_HPP

#include "sqpc/protocol/types.hpp"

namespace sqpc {

/// Alice's masked string p_a ^ K ^ m_a.
Bits compute_g(const Bits& p_a, const Bits& K, const Bits& m_a);
/// Bob's masked string p_b ^ K ^ m_b.
Bits compute_f(const Bits& p_b, const Bits& K, const Bits& m_b);

struct Comparison {
  Bits c;
  Verdict verdict;
};

/// c = g ^ f ^ m_a ^ m_b; equal iff every c bit is zero.
Comparison tp_compare(const Bits& g, const Bits& f, const Bits& m_a, const Bits& m_b);

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_POSTPROCESS_HPP
