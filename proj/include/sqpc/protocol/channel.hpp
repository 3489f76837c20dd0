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

#ifndef SQPC_PROTOCOL_CHANNEL_HPP
#define SQPC_PROTOCOL_CHANNEL_HPP

#include <cstddef>
#include <vector>

#include "sqpc/protocol/types.hpp"
#include "sqpc/quantum/state_vector.hpp"
#include "sqpc/random.hpp"

namespace sqpc {

/// What an interceptor sees on one leg: the physical register of the
/// current position and the qubit indices now travelling on the wire.
/// Replacing `in_flight` is how a system is swapped for another.
struct LegEvent {
  Phase phase;
  Leg leg;
  std::size_t position;
  quantum::StateVector& world;
  std::vector<int>& in_flight;
};

/// Hook on the quantum channel. A position's register is handed over at
/// begin_position; every leg of that position passes through on_leg.
class Interceptor {
 public:
  virtual ~Interceptor() = default;
  virtual void begin_position(Phase, std::size_t /*position*/, quantum::StateVector& /*world*/) {}
  virtual void on_leg(LegEvent& event, RandomSource& rng) = 0;
  /// Called after the BOB_TO_TP leg, before TP measures anything.
  virtual void end_position(Phase, std::size_t /*position*/, const quantum::StateVector& /*world*/) {}
};

class PassiveChannel final : public Interceptor {
 public:
  void on_leg(LegEvent&, RandomSource&) override {}
};

}  // namespace sqpc

#endif  // SQPC_PROTOCOL_CHANNEL_HPP
