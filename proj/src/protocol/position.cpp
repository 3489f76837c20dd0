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

#include "sqpc/protocol/position.hpp"

#include <stdexcept>
#include <vector>

#include "sqpc/quantum/gates.hpp"
#include "sqpc/quantum/measurement.hpp"

namespace sqpc {

using quantum::StateVector;

namespace {

void pass_leg(Interceptor& channel, Phase phase, Leg leg, std::size_t position, StateVector& world,
              std::vector<int>& in_flight, RandomSource& eve) {
  LegEvent event{phase, leg, position, world, in_flight};
  channel.on_leg(event, eve);
  for (int q : in_flight) world.check_qubit(q);
}

std::array<int, 2> measure_pair(StateVector& world, const std::vector<int>& q, RandomSource& nature) {
  return {quantum::measure_z_inplace(world, q[0], nature), quantum::measure_z_inplace(world, q[1], nature)};
}

}  // namespace

S1Transit transmit_s1_particle(StateVector& world, std::size_t position, ModesS1 modes,
                               Interceptor& channel, RandomSource& nature, RandomSource& eve) {
  S1Transit out;
  std::vector<int> flight{kS1Qubit};
  pass_leg(channel, Phase::S1, Leg::TpToAlice, position, world, flight, eve);
  if (modes.alice == ModeS1::Measure) {
    const int bit = quantum::measure_z_inplace(world, flight[0], nature);
    quantum::reprepare_z(world, flight[0], bit);
    out.alice_result = bit;
  }
  pass_leg(channel, Phase::S1, Leg::AliceToBob, position, world, flight, eve);
  if (modes.bob == ModeS1::Measure) {
    const int bit = quantum::measure_z_inplace(world, flight[0], nature);
    quantum::reprepare_z(world, flight[0], bit);
    out.bob_result = bit;
  }
  pass_leg(channel, Phase::S1, Leg::BobToTp, position, world, flight, eve);
  channel.end_position(Phase::S1, position, world);
  if (flight.size() != 1) throw std::logic_error("first-phase leg must carry exactly one qubit");
  out.returned = flight[0];
  return out;
}

S3Transit transmit_s3_pair(StateVector& world, std::size_t position, const ModesS3& modes,
                           std::optional<std::array<int, 2>> ma_bits,
                           std::optional<std::array<int, 2>> mb_bits, Interceptor& channel,
                           RandomSource& nature, RandomSource& eve) {
  S3Transit out;
  std::vector<int> flight{kS3Pair[0], kS3Pair[1]};
  pass_leg(channel, Phase::S3, Leg::TpToAlice, position, world, flight, eve);
  if (modes.alice == AliceModeS3::Measure2) {
    if (!modes.prep) throw std::logic_error("measuring Alice needs a preparation choice");
    const auto found = measure_pair(world, flight, nature);
    std::array<int, 2> fresh = found;
    if (*modes.prep == PrepChoice::FromMa) {
      if (!ma_bits) throw std::logic_error("FROM_MA preparation needs two bits of M_A");
      fresh = *ma_bits;
    }
    quantum::reprepare_z(world, flight[0], fresh[0]);
    quantum::reprepare_z(world, flight[1], fresh[1]);
    out.alice_results = found;
    out.alice_prepared = fresh;
  }
  pass_leg(channel, Phase::S3, Leg::AliceToBob, position, world, flight, eve);
  if (modes.bob == BobModeS3::Measure2) {
    if (!mb_bits) throw std::logic_error("measuring Bob needs two bits of M_B");
    out.bob_results = measure_pair(world, flight, nature);
    quantum::reprepare_z(world, flight[0], (*mb_bits)[0]);
    quantum::reprepare_z(world, flight[1], (*mb_bits)[1]);
    out.bob_prepared = *mb_bits;
  }
  pass_leg(channel, Phase::S3, Leg::BobToTp, position, world, flight, eve);
  channel.end_position(Phase::S3, position, world);
  if (flight.size() != 2) throw std::logic_error("second-phase leg must carry exactly two qubits");
  out.returned = {flight[0], flight[1]};
  return out;
}

TpReadingS1 tp_measure_s1(StateVector& world, int returned, CaseS1 c, RandomSource& nature) {
  TpReadingS1 r;
  if (c == CaseS1::C1) {
    r.fmb = quantum::measure_fmb_inplace(world, {returned, kS2Qubit, kS3Pair[0], kS3Pair[1]}, nature);
    return r;
  }
  r.bell34 = quantum::measure_bell_inplace(world, kS3Pair[0], kS3Pair[1], nature);
  r.z_s2 = quantum::measure_z_inplace(world, kS2Qubit, nature);
  r.z_returned = quantum::measure_z_inplace(world, returned, nature);
  return r;
}

TpReadingS3 tp_measure_s3(StateVector& world, std::array<int, 2> returned, CaseS3 c,
                          RandomSource& nature) {
  TpReadingS3 r;
  if (c == CaseS3::C1) {
    r.fmb = quantum::measure_fmb_inplace(world, {kS1Qubit, kS2Qubit, returned[0], returned[1]}, nature);
    return r;
  }
  r.bell12 = quantum::measure_bell_inplace(world, kS1Qubit, kS2Qubit, nature);
  if (c != CaseS3::C3) {
    r.z_pair = std::array<int, 2>{quantum::measure_z_inplace(world, returned[0], nature),
                                  quantum::measure_z_inplace(world, returned[1], nature)};
  }
  return r;
}

bool check_s1_both_reflect(const TpReadingS1& r) {
  return r.fmb && *r.fmb == quantum::FmbOutcome{0, 0};
}

bool check_s1_both_measure(int alice_bit, int bob_bit, const TpReadingS1& r) {
  return r.bell34 && r.z_s2 && r.z_returned &&
         quantum::z12_bell34_consistent(alice_bit, *r.z_s2, *r.bell34) && alice_bit == bob_bit &&
         bob_bit == *r.z_returned;
}

bool check_s1_announced(int announced_bit, const TpReadingS1& r) {
  return r.bell34 && r.z_s2 && r.z_returned && *r.z_returned == announced_bit &&
         quantum::z12_bell34_consistent(announced_bit, *r.z_s2, *r.bell34);
}

bool check_s3_both_reflect(const TpReadingS3& r) {
  return r.fmb && *r.fmb == quantum::FmbOutcome{0, 0};
}

bool check_s3_bob_measures(const std::array<int, 2>& bob_results,
                           const std::array<int, 2>& bob_prepared, const TpReadingS3& r) {
  return r.bell12 && r.z_pair && quantum::bell12_z34_consistent(*r.bell12, bob_results[0], bob_results[1]) &&
         *r.z_pair == bob_prepared;
}

bool check_s3_alice_measures(const std::array<int, 2>& alice_results, const TpReadingS3& r) {
  return r.bell12 && quantum::bell12_z34_consistent(*r.bell12, alice_results[0], alice_results[1]);
}

bool check_s3_both_measure(const std::array<int, 2>& alice_results,
                           const std::array<int, 2>& bob_prepared,
                           const std::optional<std::array<int, 2>>& as_found_bob_results,
                           const TpReadingS3& r) {
  if (!r.bell12 || !r.z_pair) return false;
  if (!quantum::bell12_z34_consistent(*r.bell12, alice_results[0], alice_results[1])) return false;
  if (*r.z_pair != bob_prepared) return false;
  return !as_found_bob_results || *as_found_bob_results == alice_results;
}

}  // namespace sqpc
