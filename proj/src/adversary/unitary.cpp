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

#include "sqpc/adversary/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace sqpc::adversary {
namespace {

void require_probe(int probe_dim, int minimum, const char* who) {
  if (probe_dim < minimum) {
    throw std::invalid_argument(std::string(who) + ": probe dimension must be at least " +
                                std::to_string(minimum));
  }
}

}  // namespace

bool is_unitary(const Unitary& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Unitary::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

Unitary identity_unitary(int probe_dim) {
  require_probe(probe_dim, 1, "identity_unitary");
  return Unitary::Identity(2 * probe_dim, 2 * probe_dim);
}

Unitary build_constrained_ue(double theta_00, double theta_11, int probe_dim) {
  require_probe(probe_dim, 2, "build_constrained_ue");
  Unitary u = identity_unitary(probe_dim);
  const double theta[2] = {theta_00, theta_11};
  for (int z = 0; z < 2; ++z) {
    const int o = z * probe_dim;
    const double c = std::cos(theta[z]), s = std::sin(theta[z]);
    u(o, o) = c;
    u(o, o + 1) = -s;
    u(o + 1, o) = s;
    u(o + 1, o + 1) = c;
  }
  return u;
}

Unitary build_violating_ue(double theta, int probe_dim) {
  require_probe(probe_dim, 2, "build_violating_ue");
  Unitary u = identity_unitary(probe_dim);
  const int pd = probe_dim;
  const double c = std::cos(theta), s = std::sin(theta);
  const int z0e0 = 0, z0e1 = 1, z1e0 = pd, z1e1 = pd + 1;
  // |0,0> -> c|0,0> + s|1,1>, |1,1> -> c|1,1> - s|0,0>
  u(z0e0, z0e0) = c;
  u(z1e1, z0e0) = s;
  u(z1e1, z1e1) = c;
  u(z0e0, z1e1) = -s;
  // |1,0> -> c|1,0> + s|0,1>, |0,1> -> c|0,1> - s|1,0>
  u(z1e0, z1e0) = c;
  u(z0e1, z1e0) = s;
  u(z0e1, z0e1) = c;
  u(z1e0, z0e1) = -s;
  return u;
}

Unitary build_cnot_probe(int probe_dim) {
  require_probe(probe_dim, 2, "build_cnot_probe");
  if (probe_dim % 2 != 0) throw std::invalid_argument("build_cnot_probe: probe dimension must be even");
  Unitary u = Unitary::Zero(2 * probe_dim, 2 * probe_dim);
  for (int z = 0; z < 2; ++z) {
    for (int e = 0; e < probe_dim; ++e) u(z * probe_dim + (e ^ z), z * probe_dim + e) = 1;
  }
  return u;
}

}  // namespace sqpc::adversary
