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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "acspin/angmom.hpp"
#include "acspin/ensemble.hpp"
#include "acspin/error.hpp"

using namespace acspin;

TEST_CASE("single spin operators are half Pauli matrices") {
  const CMatrix sx = site_operator(1, 0, 0);
  const CMatrix sy = site_operator(1, 0, 1);
  const CMatrix sz = site_operator(1, 0, 2);
  CHECK(std::abs(sx(0, 1) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(sy(0, 1) - cplx(0.0, -0.5)) < 1e-15);
  CHECK(std::abs(sz(0, 0) - cplx(0.5)) < 1e-15);
  CHECK(max_abs(commutator(sx, sy) - kI * sz) < 1e-15);
}

TEST_CASE("collective Jz spectrum has binomial multiplicities") {
  const CollectiveOperators j = collective_operators(4);
  const RVector ev = eigvalsh(j.jz.matrix());
  const int expected[] = {1, 4, 6, 4, 1};
  for (int k = 0; k <= 4; ++k) {
    const double m = k - 2.0;
    int count = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) count += std::abs(ev(i) - m) < 1e-12;
    CHECK(count == expected[k]);
  }
}

TEST_CASE("symmetric subspace carries the spin N/2 representation") {
  for (int n = 1; n <= 6; ++n) {
    const CMatrix v = symmetric_embedding(n);
    CHECK(max_abs(v.adjoint() * v - CMatrix::Identity(n + 1, n + 1)) < 1e-14);
    const CollectiveOperators c = collective_operators(n);
    const SpinOperators s = spin_operators(SpinQuantumNumber(n));
    CHECK(max_abs(v.adjoint() * c.jx.matrix() * v - s.jx.matrix()) < 1e-13);
    CHECK(max_abs(v.adjoint() * c.jy.matrix() * v - s.jy.matrix()) < 1e-13);
    CHECK(max_abs(v.adjoint() * c.jz.matrix() * v - s.jz.matrix()) < 1e-13);
  }
}

TEST_CASE("collective control keeps the state symmetric") {
  const int n = 5;
  const CMatrix v = symmetric_embedding(n);
  const CollectiveOperators c = collective_operators(n);
  CVector psi = v * coherent_state_y(SpinQuantumNumber(n)).amplitudes();
  const double steps[][2] = {{0.7, 0.3}, {-1.1, 0.9}, {2.0, -0.4}};
  for (const auto& s : steps) {
    psi = expm_hermitian(c.jy, s[0]).matrix() * psi;
    psi = expm_hermitian(c.jz2, s[1]).matrix() * psi;
  }
  const CVector inside = v * (v.adjoint() * psi);
  CHECK((psi - inside).norm() < 1e-12);
}

TEST_CASE("noise samples hit their norms exactly") {
  for (bool rwa : {true, false}) {
    const NoiseSample s = sample_noise(4, 0.3, 0.03, rwa, 11);
    CHECK(std::abs(operator_norm(s.h_dis) - 0.3) < 1e-12);
    CHECK(std::abs(operator_norm(s.h_dd) - 0.03) < 1e-12);
    CHECK(std::abs(s.h_dd.matrix().trace()) < 1e-12);
    CHECK(max_abs(s.h_err.matrix() - s.h_dis.matrix() - s.h_dd.matrix()) < 1e-15);
    CHECK(s.instance.dipolar.size() == 6u);
  }
}

TEST_CASE("RWA noise conserves total Jz") {
  const NoiseSample s = sample_noise(4, 1.0, 0.1, true, 3);
  const CMatrix jz = collective_operators(4).jz.matrix();
  CHECK(max_abs(commutator(s.h_err.matrix(), jz)) < 1e-12);
  const CMatrix jz2 = jz * jz;
  CHECK(max_abs(commutator(s.h_err.matrix(), jz2)) < 1e-12);
}

TEST_CASE("noise draws are reproducible and serializable") {
  const NoiseSample a = sample_noise(3, 0.5, 0.05, false, 99);
  const NoiseSample b = sample_noise(3, 0.5, 0.05, false, 99);
  CHECK(max_abs(a.h_err.matrix() - b.h_err.matrix()) == 0.0);
  const NoiseInstance back = noise_from_json(noise_to_json(a.instance));
  CHECK(max_abs(disorder_hamiltonian(back).matrix() - a.h_dis.matrix()) < 1e-14);
  CHECK(max_abs(dipolar_hamiltonian(back).matrix() - a.h_dd.matrix()) < 1e-14);
}

TEST_CASE("operator norm is the largest absolute eigenvalue") {
  CMatrix h = CMatrix::Zero(3, 3);
  h(0, 0) = 0.2;
  h(1, 1) = -0.7;
  h(2, 2) = 0.5;
  CHECK(std::abs(operator_norm(h) - 0.7) < 1e-15);
  CHECK(operator_norm(collective_operators(3).jx) == doctest::Approx(1.5));
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(collective_operators(0), Error);
  CHECK_THROWS_AS(collective_operators(11), Error);
  CHECK_THROWS_AS(sample_noise(1, 0.1, 0.1, true, 1), Error);
  CHECK_NOTHROW(sample_noise(1, 0.1, 0.0, true, 1));
  CHECK_THROWS_AS(noise_from_json("{"), Error);
}
