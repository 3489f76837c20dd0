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

#include <sstream>
#include <stdexcept>

#include "sqpc/adversary/attack.hpp"
#include "sqpc/quantum/density.hpp"
#include "sqpc/quantum/measurement.hpp"

namespace sqpc::adversary {

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::TpaThenAb: return "TPA_THEN_AB";
    case Placement::TpaThenBt: return "TPA_THEN_BT";
    case Placement::AbThenBt: return "AB_THEN_BT";
  }
  return "?";
}

std::pair<Leg, Leg> placement_legs(Placement p) {
  switch (p) {
    case Placement::TpaThenAb: return {Leg::TpToAlice, Leg::AliceToBob};
    case Placement::TpaThenBt: return {Leg::TpToAlice, Leg::BobToTp};
    case Placement::AbThenBt: return {Leg::AliceToBob, Leg::BobToTp};
  }
  throw std::invalid_argument("unknown placement");
}

std::string describe(const AttackSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, NoAttack>) {
          out << "none";
        } else if constexpr (std::is_same_v<T, InterceptResend>) {
          out << "intercept-resend v" << a.variant << " " << to_string(a.phase);
        } else if constexpr (std::is_same_v<T, MeasureResend>) {
          out << "measure-resend " << to_string(a.leg) << " " << to_string(a.phase);
        } else {
          out << "entangle-measure " << to_string(a.placement) << " " << to_string(a.phase)
              << " probe_dim=" << a.probe_dim;
        }
      },
      spec);
  return out.str();
}

void validate(const AttackSpec& spec) {
  if (const auto* ir = std::get_if<InterceptResend>(&spec)) {
    if (ir->variant < 1 || ir->variant > 3) {
      throw std::invalid_argument("intercept-resend variant must be 1, 2 or 3");
    }
  }
  if (const auto* em = std::get_if<EntangleMeasure>(&spec)) {
    const auto want = 2 * em->probe_dim;
    for (const Unitary* u : {&em->u_first, &em->u_second}) {
      if (u->rows() != want || u->cols() != want) {
        throw std::invalid_argument("entangle-measure unitary must be " + std::to_string(want) + "x" +
                                    std::to_string(want) + " for probe_dim " +
                                    std::to_string(em->probe_dim));
      }
      if (!is_unitary(*u)) throw std::invalid_argument("entangle-measure operator is not unitary");
    }
  }
}

std::unique_ptr<Interceptor> make_interceptor(const AttackSpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& a) -> std::unique_ptr<Interceptor> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, NoAttack>) {
          return std::make_unique<PassiveChannel>();
        } else if constexpr (std::is_same_v<T, InterceptResend>) {
          return std::make_unique<InterceptResendChannel>(a);
        } else if constexpr (std::is_same_v<T, MeasureResend>) {
          return std::make_unique<MeasureResendChannel>(a);
        } else {
          return std::make_unique<EntangleMeasureChannel>(a);
        }
      },
      spec);
}

InterceptResendChannel::InterceptResendChannel(InterceptResend spec) : spec_(spec) {
  validate(AttackSpec{spec});
}

void InterceptResendChannel::begin_position(Phase, std::size_t, quantum::StateVector& world) {
  held_.clear();
  genuine_limit_ = world.num_qubits();
}

void InterceptResendChannel::on_leg(LegEvent& ev, RandomSource& rng) {
  if (ev.phase != spec_.phase) return;
  const int v = spec_.variant;
  const bool substitute = (v != 3 && ev.leg == Leg::TpToAlice) || (v == 3 && ev.leg == Leg::AliceToBob);
  const bool swap_back = (v == 1 && ev.leg == Leg::AliceToBob) || (v != 1 && ev.leg == Leg::BobToTp);
  if (substitute) {
    std::vector<int> fakes;
    for (std::size_t k = 0; k < ev.in_flight.size(); ++k) fakes.push_back(ev.world.append_qubit(rng.bit()));
    held_ = std::exchange(ev.in_flight, std::move(fakes));
  } else if (swap_back) {
    std::swap(ev.in_flight, held_);
  }
}

void InterceptResendChannel::end_position(Phase phase, std::size_t position, const quantum::StateVector&) {
  if (phase != spec_.phase) return;
  for (int q : held_) {
    if (q < genuine_limit_) {
      throw std::logic_error("intercept-resend kept genuine qubit " + std::to_string(q) +
                             " at position " + std::to_string(position));
    }
  }
}

void MeasureResendChannel::on_leg(LegEvent& ev, RandomSource& rng) {
  if (ev.phase != spec_.phase || ev.leg != spec_.leg) return;
  for (int q : ev.in_flight) quantum::measure_z_inplace(ev.world, q, rng);
}

EntangleMeasureChannel::EntangleMeasureChannel(EntangleMeasure spec) : spec_(std::move(spec)) {
  validate(AttackSpec{spec_});
}

void EntangleMeasureChannel::begin_position(Phase phase, std::size_t, quantum::StateVector&) {
  if (phase != spec_.phase) return;
  attached_ = false;
  snapshot_.reset();
}

void EntangleMeasureChannel::on_leg(LegEvent& ev, RandomSource&) {
  if (ev.phase != spec_.phase) return;
  const auto [first, second] = placement_legs(spec_.placement);
  const Unitary* u = ev.leg == first ? &spec_.u_first : ev.leg == second ? &spec_.u_second : nullptr;
  if (u == nullptr) return;
  if (!attached_) {
    ev.world.attach_probe(spec_.probe_dim);
    attached_ = true;
  }
  for (int q : ev.in_flight) quantum::apply_qubit_probe_unitary(ev.world, q, *u);
}

void EntangleMeasureChannel::end_position(Phase phase, std::size_t, const quantum::StateVector& world) {
  if (phase != spec_.phase || !attached_) return;
  snapshot_ = quantum::probe_density(world);
}

ProtocolRun run_protocol(const Bits& p_a, const Bits& p_b, const ProtocolConfig& config,
                         const AttackSpec& attack) {
  auto channel = make_interceptor(attack);
  return sqpc::run_protocol(p_a, p_b, config, *channel);
}

}  // namespace sqpc::adversary
