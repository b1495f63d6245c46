// Copyright 2026 The acspin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <memory>

#include "acspin/linalg.hpp"

namespace acspin {

/// Spin quantum number j, stored as 2j so half-integers are exact.
class SpinQuantumNumber {
 public:
  explicit SpinQuantumNumber(int two_j);
  /// Accepts j as a real number; rejects anything that is not a positive
  /// half-integer.
  static SpinQuantumNumber from_value(double j);

  int two_j() const { return two_j_; }
  double value() const { return 0.5 * two_j_; }
  int dim() const { return two_j_ + 1; }
  bool is_integer() const { return two_j_ % 2 == 0; }
  /// Magnetic quantum number of basis index k (k = 0 is m = j).
  double m(int k) const { return value() - k; }

  friend bool operator==(SpinQuantumNumber a, SpinQuantumNumber b) { return a.two_j_ == b.two_j_; }

 private:
  int two_j_;
};

/// Normalized spin-j state; amplitudes ordered m = j, j-1, ..., -j.
class SpinState {
 public:
  SpinState(SpinQuantumNumber j, CVector amplitudes);
  /// Normalizes the given vector instead of rejecting it.
  static SpinState normalized(SpinQuantumNumber j, CVector amplitudes);
  static SpinState basis(SpinQuantumNumber j, int index);

  SpinQuantumNumber spin() const { return j_; }
  const CVector& amplitudes() const { return amps_; }
  CMatrix density_matrix() const { return amps_ * amps_.adjoint(); }

 private:
  SpinQuantumNumber j_;
  CVector amps_;
};

struct SpinOperators {
  HermitianOperator jx, jy, jz, jz2;
};

/// J_x, J_y, J_z and J_z^2 for spin j from the ladder operators
/// <j,m+-1|J+-|j,m> = sqrt(j(j+1) - m(m+-1)).
SpinOperators spin_operators(SpinQuantumNumber j);

/// exp(-i phi J_z) exp(-i polar J_y) |j,j>, written in closed form.
SpinState coherent_state(SpinQuantumNumber j, double polar, double azimuth);
/// The protocol's starting point, the coherent state along +y.
SpinState coherent_state_y(SpinQuantumNumber j);

/// Cached spectral decomposition of J_y for one spin, used by every rotation.
std::shared_ptr<const Eigensystem> jy_eigensystem(SpinQuantumNumber j);

/// R_y(theta) = exp(-i J_y theta).
Propagator rotation_pulse(SpinQuantumNumber j, double theta);
/// S_z(eta) = exp(-i J_z^2 eta), diagonal.
Propagator squeezing_pulse(SpinQuantumNumber j, double eta);

// O(d^2) in-place applications used by the protocol optimizer.
void apply_rotation_y(SpinQuantumNumber j, double theta, CVector& psi);
void apply_squeezing_z(SpinQuantumNumber j, double eta, CVector& psi);

}  // namespace acspin
