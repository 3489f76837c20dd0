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

#ifndef SQPC_ADVERSARY_UNITARY_HPP
#define SQPC_ADVERSARY_UNITARY_HPP

#include "sqpc/quantum/gates.hpp"

namespace sqpc::adversary {

/// Operator on (travelling qubit) x (probe), row index bit * probe_dim + e.
using Unitary = quantum::MatrixX<double>;

bool is_unitary(const Unitary& u, double tol = 1e-10);

Unitary identity_unitary(int probe_dim = 2);

/// Qubit-controlled probe rotation: |0>|E> -> |0>|e00>, |1>|E> -> |1>|e11>
/// with e_zz = cos(theta_zz)|0> + sin(theta_zz)|1>. Never flips the
/// travelling qubit, so the flip amplitudes lambda01 and lambda10 vanish.
Unitary build_constrained_ue(double theta_00, double theta_11, int probe_dim = 2);

/// Flips the travelling qubit with amplitude sin(theta) and records the flip
/// in the probe: |0>|0> -> cos|0>|0> + sin|1>|1>, |1>|0> -> cos|1>|0> + sin|0>|1>.
Unitary build_violating_ue(double theta, int probe_dim = 2);

/// Copies the Z value of the travelling qubit into the probe: |z>|e> -> |z>|e^z>.
Unitary build_cnot_probe(int probe_dim = 2);

}  // namespace sqpc::adversary

#endif  // SQPC_ADVERSARY_UNITARY_HPP
