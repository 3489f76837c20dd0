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

#ifndef SQPC_PROTOCOL_POSITION_HPP
#define SQPC_PROTOCOL_POSITION_HPP

#include <array>
#include <optional>

#include "sqpc/protocol/channel.hpp"
#include "sqpc/protocol/types.hpp"
#include "sqpc/quantum/states.hpp"

namespace sqpc {

/// Qubit slots inside one chi-type system. The first particle travels in
/// the first phase, the last two travel together in the second phase, the
/// second particle never leaves TP.
inline constexpr int kS1Qubit = 0;
inline constexpr int kS2Qubit = 1;
inline constexpr std::array<int, 2> kS3Pair = {2, 3};

struct S1Transit {
  std::optional<int> alice_result;
  std::optional<int> bob_result;
  int returned = kS1Qubit;  // slot TP receives back
};

/// One round trip TP -> Alice -> Bob -> TP of a first-phase particle.
/// Born outcomes come from `nature`, the interceptor draws from `eve`.
S1Transit transmit_s1_particle(quantum::StateVector& world, std::size_t position, ModesS1 modes,
                               Interceptor& channel, RandomSource& nature, RandomSource& eve);

struct S3Transit {
  std::optional<std::array<int, 2>> alice_results;
  std::optional<std::array<int, 2>> alice_prepared;
  std::optional<std::array<int, 2>> bob_results;
  std::optional<std::array<int, 2>> bob_prepared;
  std::array<int, 2> returned = kS3Pair;
};

/// Round trip of a second-phase pair. `ma_bits` is required when Alice
/// prepares from her random string, `mb_bits` when Bob measures.
S3Transit transmit_s3_pair(quantum::StateVector& world, std::size_t position, const ModesS3& modes,
                           std::optional<std::array<int, 2>> ma_bits,
                           std::optional<std::array<int, 2>> mb_bits, Interceptor& channel,
                           RandomSource& nature, RandomSource& eve);

struct TpReadingS1 {
  std::optional<quantum::FmbOutcome> fmb;
  std::optional<quantum::BellOutcome> bell34;
  std::optional<int> z_s2;
  std::optional<int> z_returned;
};

/// TP's measurement of a stored first-phase system: FMB on the whole
/// system for C1, otherwise Bell on the pair it kept, Z on its second
/// particle and Z on the returned one.
TpReadingS1 tp_measure_s1(quantum::StateVector& world, int returned, CaseS1 c, RandomSource& nature);

struct TpReadingS3 {
  std::optional<quantum::FmbOutcome> fmb;
  std::optional<quantum::BellOutcome> bell12;
  std::optional<std::array<int, 2>> z_pair;
};

/// FMB for C1; Bell on the first two particles plus Z on the returned pair
/// for C2 and C4; Bell only for C3 (the returned pair is discarded).
TpReadingS3 tp_measure_s3(quantum::StateVector& world, std::array<int, 2> returned, CaseS3 c,
                          RandomSource& nature);

// TP-side checks. Each returns true when the position looks honest.
bool check_s1_both_reflect(const TpReadingS1& r);
bool check_s1_both_measure(int alice_bit, int bob_bit, const TpReadingS1& r);
/// Single announced bit from the measuring party (C3 Bob, C4 Alice).
bool check_s1_announced(int announced_bit, const TpReadingS1& r);

bool check_s3_both_reflect(const TpReadingS3& r);
bool check_s3_bob_measures(const std::array<int, 2>& bob_results,
                           const std::array<int, 2>& bob_prepared, const TpReadingS3& r);
bool check_s3_alice_measures(const std::array<int, 2>& alice_results, const TpReadingS3& r);
/// C4: Bell correlation against Alice, returned pair against Bob's string,
/// and (for an AS_FOUND pair) Alice's results against Bob's.
bool check_s3_both_measure(const std::array<int, 2>& alice_results,
                           const std::array<int, 2>& bob_prepared,
                           const std::optional<std::array<int, 2>>& as_found_bob_results,
                           const TpReadingS3& r);

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_POSITION_HPP
