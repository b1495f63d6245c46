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
#include <vector>

#include "acspin/angmom.hpp"
#include "acspin/linalg.hpp"

namespace acspin {

// Tensor operators use <j,m'|T_LM|j,m> = sqrt((2L+1)/(2j+1)) <j m, L M|j m'>,
// which makes {T_LM} orthonormal under Tr(A B^dagger). All T_LM are real.

/// Flat index of (L, M) in multipole vectors: L^2 + L + M.
inline int multipole_index(int L, int M) { return L * L + L + M; }
inline int multipole_count(int max_L) { return (max_L + 1) * (max_L + 1); }

/// Nonzero band of T_LM: entry b holds <row b-M|T_LM|col b>, zero where the
/// row falls outside the basis.
struct TensorBand {
  int L = 0;
  int M = 0;
  std::vector<double> values;
};

/// All bands of order L for spin j (2L+1 of them, M = -L..L). Cached.
std::shared_ptr<const std::vector<TensorBand>> tensor_bands(SpinQuantumNumber j, int L);

CMatrix tensor_operator(SpinQuantumNumber j, int L, int M);

/// Statistical tensors rho_LM = Tr(rho T_LM^dagger) for 0 <= L <= max_L.
class MultipoleDecomposition {
 public:
  MultipoleDecomposition(SpinQuantumNumber j, int max_L, std::vector<cplx> coefficients);

  SpinQuantumNumber spin() const { return j_; }
  int max_order() const { return max_L_; }
  cplx operator()(int L, int M) const;
  const std::vector<cplx>& coefficients() const { return c_; }
  /// Sum over M of |rho_LM|^2.
  double order_weight(int L) const;

 private:
  SpinQuantumNumber j_;
  int max_L_;
  std::vector<cplx> c_;
};

/// Full decomposition (max order 2j). Rejects a matrix of the wrong size.
MultipoleDecomposition decompose(const CMatrix& rho, SpinQuantumNumber j);
/// Decomposition of |psi><psi| truncated at max_L.
MultipoleDecomposition decompose(const SpinState& psi, int max_L);
/// Inverse of the full decomposition.
CMatrix reconstruct(const MultipoleDecomposition& d);

/// Spin-t/2 reduced state rho_t built from the multipoles of order <= t.
class ReducedState {
 public:
  ReducedState(int order, CMatrix isotropic_deviation);

  int order() const { return t_; }
  /// The (t+1)x(t+1) density matrix.
  CMatrix entries() const;
  /// rho_t - I/(t+1), kept separately so its spectrum is resolved to full
  /// relative precision near anticoherent states.
  const CMatrix& anisotropic_part() const { return aniso_; }
  RVector eigenvalues() const;

 private:
  int t_;
  CMatrix aniso_;
};

/// t!/N! sqrt((N-L)!(N+L+1)!/((t-L)!(t+L+1)!)) with N = 2j, for L = 0..t.
std::vector<double> reduced_state_weights(SpinQuantumNumber j, int t);

ReducedState reduced_state(const MultipoleDecomposition& d, int t);

/// Bures anticoherence measure A_t in [0, 1].
double ac_measure(const CMatrix& rho, SpinQuantumNumber j, int t);
double ac_measure(const SpinState& psi, int t);
/// 1 - A_t evaluated without cancellation.
double ac_deviation(const SpinState& psi, int t);
/// (1 - A_t)^2 from the spectrum of the anisotropic part of rho_t.
double ac_deviation_squared(const RVector& anisotropic_eigenvalues, int t);

/// Hot-path evaluator for one (j, t): holds the tensor bands and weights so
/// repeated evaluation does no cache lookups or allocation beyond the
/// (t+1)x(t+1) eigensolve.
class AnticoherenceEvaluator {
 public:
  AnticoherenceEvaluator(SpinQuantumNumber j, int t);

  double deviation_squared(const CVector& psi) const;
  double deviation(const CVector& psi) const;
  int order() const { return t_; }

 private:
  SpinQuantumNumber j_;
  int t_;
  std::vector<std::shared_ptr<const std::vector<TensorBand>>> state_bands_;
  std::vector<std::shared_ptr<const std::vector<TensorBand>>> reduced_bands_;
  std::vector<double> weights_;
};

enum class MultipoleFlow { rotation, squeezing };

/// Matrix G with d(rho_LM)/dt = sum G_{LM,L'M'} rho_L'M' under the unit-rate
/// Hamiltonian J_y (rotation) or J_z^2 (squeezing). Built by projecting the
/// commutators [H, T_L'M'] onto the tensor basis; indices follow
/// multipole_index().
CMatrix multipole_generator(SpinQuantumNumber j, MultipoleFlow flow);

/// Evolves a full decomposition under exp(G tau).
MultipoleDecomposition evolve_multipoles(const MultipoleDecomposition& d, MultipoleFlow flow, double tau);

}  // namespace acspin
