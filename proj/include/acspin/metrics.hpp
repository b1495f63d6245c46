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

#include "acspin/linalg.hpp"

namespace acspin {

/// sqrt(1 - |Tr(U V^dag)| / d). Evaluated from the eigenphases of V^dag U so
/// that distances near 1e-8 keep their relative precision.
double distance(const CMatrix& u, const CMatrix& v);

/// 1 - |<psi0| V^dag U |psi0>|^2.
double infidelity(const CMatrix& u, const CMatrix& v, const CVector& psi0);

/// Hermitian Phi with W = exp(-i Phi), eigenphases taken in (-pi, pi].
CMatrix unitary_log(const CMatrix& w);

inline constexpr double kMagnusRadius = 1.0868;

/// Upper bound on |Phi^[n]|: pi (tau |H| / xi)^n, and (tau |H|)^2 / 2 for n = 2.
double magnus_bound(int n, double tau_norm);
/// The general bound pi (tau |H| / xi)^n for any n, including 2.
double magnus_bound_general(int n, double tau_norm);

struct RegimeThresholds {
  double nodd_bound = 0.0;          // tau |H| / sqrt 2
  double dcg_bound = 0.0;           // (tau_DCG |H|)^2 / (2 sqrt 2)
  double magnus_condition = 0.0;    // 2 / (gamma alpha^2): DCG bound beats NoDD below this |H|/chi
  double lambda = 0.0;              // sqrt(2 / (gamma alpha^2))
  double dd_error_threshold = 0.0;  // epsilon below which DCG still wins, DD-pulse errors
  double type1_threshold = 0.0;     // same for type I balanced-pair errors
  double type2_threshold = 0.0;     // same for type II balanced-pair errors
  double dd_limit = 0.0;            // |H|/chi below which epsilon dominates: epsilon
  double type1_limit = 0.0;         // sqrt(epsilon) / lambda
  double type2_limit = 0.0;         // sqrt(epsilon) / (beta lambda)
};

/// alpha = tau_DCG / tau, beta = tau_BP / tau, gamma = chi tau; h = |H_err| / chi.
/// The *_limit fields are evaluated at `epsilon`.
RegimeThresholds regime_thresholds(double alpha, double beta, double gamma, double h, double epsilon = 0.0);

}  // namespace acspin
