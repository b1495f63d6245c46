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

#include <cstdint>
#include <string>
#include <vector>

#include "acspin/angmom.hpp"
#include "acspin/linalg.hpp"

namespace acspin {

inline constexpr int kMaxEnsembleSize = 10;

/// Product basis of N spin-1/2: spin 0 is the most significant bit, bit 0
/// is spin up (m = +1/2).
Eigen::Index ensemble_dim(int n);

/// Single-spin operator j_{site, axis} embedded in the N-spin space;
/// axis 0, 1, 2 = x, y, z.
CMatrix site_operator(int n, int site, int axis);

struct CollectiveOperators {
  HermitianOperator jx, jy, jz, jz2;
};

/// J_a = sum_i j_{i,a}; rejects N outside [1, 10].
CollectiveOperators collective_operators(int n);

/// Isometry from spin-N/2 (basis m = N/2..-N/2) into the N-spin space;
/// column k is the normalized Dicke state with k spins down.
CMatrix symmetric_embedding(int n);

struct DisorderTerm {
  double delta = 0.0;
  Vec3 axis = Vec3::UnitZ();
};

struct DipolarTerm {
  int i = 0;
  int k = 1;
  double coupling = 0.0;
  Vec3 axis = Vec3::UnitZ();
};

/// Disorder and dipolar couplings of an N-spin ensemble. Under the rotating
/// wave approximation all axes are +z.
struct NoiseInstance {
  int n = 0;
  bool rwa = true;
  std::uint64_t seed = 0;
  std::vector<DisorderTerm> disorder;
  std::vector<DipolarTerm> dipolar;  // all pairs i < k
};

/// sum_i delta_i (e_i . j_i)
HermitianOperator disorder_hamiltonian(const NoiseInstance& inst);
/// sum_{i<k} Delta_ik [3 (e_ik . j_i)(e_ik . j_k) - j_i . j_k]
HermitianOperator dipolar_hamiltonian(const NoiseInstance& inst);

struct NoiseSample {
  NoiseInstance instance;
  HermitianOperator h_dis;
  HermitianOperator h_dd;
  HermitianOperator h_err;
};

/// Couplings uniform on [-1, 1], axes uniform on the sphere (or +z under
/// the RWA); each term is then rescaled so its operator norm equals the
/// target exactly. The stored couplings are the rescaled ones.
NoiseSample sample_noise(int n, double disorder_norm, double dipolar_norm, bool rwa, std::uint64_t seed);

/// Largest absolute eigenvalue.
double operator_norm(const HermitianOperator& h);
double operator_norm(const CMatrix& hermitian);

std::string noise_to_json(const NoiseInstance& inst);
NoiseInstance noise_from_json(const std::string& text);

}  // namespace acspin
