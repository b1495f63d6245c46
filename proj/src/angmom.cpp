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

#include "acspin/angmom.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "acspin/error.hpp"

namespace acspin {

SpinQuantumNumber::SpinQuantumNumber(int two_j) : two_j_(two_j) {
  require(two_j >= 1, ErrorCode::invalid_argument, "spin: 2j must be >= 1");
}

SpinQuantumNumber SpinQuantumNumber::from_value(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  require(std::isfinite(j) && std::abs(twice - rounded) < 1e-9 && rounded >= 1.0,
          ErrorCode::invalid_argument, "spin: j must be a positive half-integer");
  return SpinQuantumNumber(static_cast<int>(rounded));
}

SpinState::SpinState(SpinQuantumNumber j, CVector amplitudes) : j_(j), amps_(std::move(amplitudes)) {
  require(amps_.size() == j.dim(), ErrorCode::dimension_mismatch,
          "SpinState: amplitude vector length must be 2j+1");
  require(std::abs(amps_.norm() - 1.0) <= kNormTol, ErrorCode::invalid_argument,
          "SpinState: amplitudes are not normalized");
}

SpinState SpinState::normalized(SpinQuantumNumber j, CVector amplitudes) {
  const double n = amplitudes.norm();
  require(n > 0.0 && std::isfinite(n), ErrorCode::invalid_argument, "SpinState: zero vector");
  amplitudes /= n;
  return SpinState(j, std::move(amplitudes));
}

SpinState SpinState::basis(SpinQuantumNumber j, int index) {
  require(index >= 0 && index < j.dim(), ErrorCode::invalid_argument, "SpinState: basis index out of range");
  CVector v = CVector::Zero(j.dim());
  v(index) = 1.0;
  return SpinState(j, std::move(v));
}

SpinOperators spin_operators(SpinQuantumNumber j) {
  const int d = j.dim();
  const double jv = j.value();
  CMatrix jp = CMatrix::Zero(d, d);
  CMatrix jz = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = j.m(k);
    jz(k, k) = m;
    // J+ |m> lands on index k-1.
    if (k > 0) jp(k - 1, k) = std::sqrt(jv * (jv + 1.0) - m * (m + 1.0));
  }
  const CMatrix jm = jp.adjoint();
  const CMatrix jx = 0.5 * (jp + jm);
  const CMatrix jy = (jp - jm) / (2.0 * kI);
  return {HermitianOperator(jx), HermitianOperator(jy), HermitianOperator(jz),
          HermitianOperator(jz * jz)};
}

SpinState coherent_state(SpinQuantumNumber j, double polar, double azimuth) {
  const int d = j.dim();
  const int n = j.two_j();
  const double c = std::cos(0.5 * polar);
  const double s = std::sin(0.5 * polar);
  CVector amps(d);
  for (int k = 0; k < d; ++k) {
    // <j,m|R|j,j> = sqrt(C(2j, k)) cos^{2j-k} sin^k with k = j - m
    const int up = n - k;
    double mag;
    if ((up > 0 && c == 0.0) || (k > 0 && s == 0.0)) {
      mag = 0.0;
    } else {
      const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(up + 1.0);
      double log_mag = 0.5 * log_binom;
      if (up > 0) log_mag += up * std::log(std::abs(c));
      if (k > 0) log_mag += k * std::log(std::abs(s));
      mag = std::exp(log_mag);
      if (c < 0.0 && up % 2 == 1) mag = -mag;
      if (s < 0.0 && k % 2 == 1) mag = -mag;
    }
    amps(k) = mag * std::exp(-kI * (j.m(k) * azimuth));
  }
  return SpinState::normalized(j, std::move(amps));
}

SpinState coherent_state_y(SpinQuantumNumber j) {
  return coherent_state(j, 0.5 * M_PI, 0.5 * M_PI);
}

std::shared_ptr<const Eigensystem> jy_eigensystem(SpinQuantumNumber j) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const Eigensystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(j.two_j());
  if (it != cache.end()) return it->second;
  auto es = std::make_shared<const Eigensystem>(eigh(spin_operators(j).jy));
  cache.emplace(j.two_j(), es);
  return es;
}

Propagator rotation_pulse(SpinQuantumNumber j, double theta) {
  require(std::isfinite(theta), ErrorCode::invalid_argument, "rotation_pulse: non-finite angle");
  return Propagator(expm_from_eigensystem(*jy_eigensystem(j), theta));
}

Propagator squeezing_pulse(SpinQuantumNumber j, double eta) {
  require(std::isfinite(eta), ErrorCode::invalid_argument, "squeezing_pulse: non-finite angle");
  const int d = j.dim();
  CMatrix s = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = j.m(k);
    s(k, k) = std::exp(-kI * (m * m * eta));
  }
  return Propagator(s);
}

void apply_rotation_y(SpinQuantumNumber j, double theta, CVector& psi) {
  if (theta == 0.0) return;
  const auto es = jy_eigensystem(j);
  CVector coeffs = es->vectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) coeffs(k) *= std::exp(-kI * (es->values(k) * theta));
  psi = es->vectors * coeffs;
}

void apply_squeezing_z(SpinQuantumNumber j, double eta, CVector& psi) {
  for (int k = 0; k < j.dim(); ++k) {
    const double m = j.m(k);
    psi(k) *= std::exp(-kI * (m * m * eta));
  }
}

}  // namespace acspin
