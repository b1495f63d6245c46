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
#include <random>

#include "acspin/ensemble.hpp"
#include "acspin/error.hpp"
#include "acspin/metrics.hpp"

using namespace acspin;

namespace {

CMatrix random_unitary(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = cplx(g(rng), g(rng));
  const Eigen::HouseholderQR<CMatrix> qr(a);
  return qr.householderQ();
}

CMatrix random_hermitian(Eigen::Index d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix a(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) a(r, c) = cplx(g(rng), g(rng));
  return 0.5 * (a + a.adjoint());
}

}  // namespace

TEST_CASE("distance basics") {
  const CMatrix u = random_unitary(5, 3);
  CHECK(distance(u, u) < 1e-14);
  CHECK(distance(u, std::exp(kI * 0.7) * u) < 1e-7);

  CMatrix z = CMatrix::Identity(2, 2);
  z(1, 1) = -1.0;
  CHECK(distance(z, CMatrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));

  const CMatrix v = random_unitary(5, 4);
  const CMatrix w = random_unitary(5, 5);
  CHECK(distance(u, v) == doctest::Approx(distance(v, u)).epsilon(1e-12));
  // invariant under a common unitary on either side
  CHECK(distance(w * u, w * v) == doctest::Approx(distance(u, v)).epsilon(1e-10));
  CHECK(distance(u * w, v * w) == doctest::Approx(distance(u, v)).epsilon(1e-10));
  CHECK(distance(u, v) <= 1.0);
}

TEST_CASE("distance resolves small generators") {
  // exp(-i x H) against the identity: distance ~ x * sqrt(var(H) / 2) for small x
  const CMatrix h = random_hermitian(6, 11);
  const RVector ev = eigvalsh(h);
  const double mean = ev.mean();
  const double var = (ev.array() - mean).square().mean();
  for (double x : {1e-9, 1e-6, 1e-3}) {
    const CMatrix u = expm_hermitian_unchecked(h, x);
    CHECK(distance(u, CMatrix::Identity(6, 6)) == doctest::Approx(x * std::sqrt(var / 2)).epsilon(1e-3));
  }
}

TEST_CASE("distance rejects bad input") {
  CHECK_THROWS_AS(distance(CMatrix::Identity(2, 2), CMatrix::Identity(3, 3)), Error);
  CHECK_THROWS_AS(distance(2.0 * CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)), Error);
}

TEST_CASE("infidelity") {
  const CMatrix u = random_unitary(4, 8);
  CVector psi = CVector::Zero(4);
  psi(0) = 1.0;
  CHECK(infidelity(u, u, psi) < 1e-15);
  CHECK(infidelity(std::exp(kI * 1.3) * u, u, psi) < 1e-15);
  CMatrix x = CMatrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  CVector up = CVector::Zero(2);
  up(0) = 1.0;
  CHECK(infidelity(x, CMatrix::Identity(2, 2), up) == doctest::Approx(1.0));
  // small rotation: 1 - cos^2(a) = sin^2(a)
  const double a = 1e-6;
  CMatrix r(2, 2);
  r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  CHECK(infidelity(r, CMatrix::Identity(2, 2), up) == doctest::Approx(std::sin(a) * std::sin(a)).epsilon(1e-8));
}

TEST_CASE("unitary_log inverts the exponential") {
  const CMatrix h = random_hermitian(5, 21);
  const CMatrix u = expm_hermitian_unchecked(h, 0.3);
  const CMatrix phi = unitary_log(u);
  CHECK(max_abs(expm_hermitian_unchecked(phi, 1.0) - u) < 1e-12);
  CHECK(max_abs(phi - 0.3 * h) < 1e-12);
}

TEST_CASE("magnus bounds") {
  CHECK(magnus_bound(2, 0.1) == doctest::Approx(0.005));
  CHECK(magnus_bound(3, kMagnusRadius) == doctest::Approx(std::acos(-1.0)));
  CHECK(magnus_bound_general(2, 0.1) == doctest::Approx(std::acos(-1.0) * std::pow(0.1 / 1.0868, 2)));
  CHECK_THROWS_AS(magnus_bound(0, 0.1), Error);
  CHECK_THROWS_AS(magnus_bound(2, -0.1), Error);
}

TEST_CASE("regime thresholds") {
  const double alpha = 56, beta = 24, gamma = std::acos(-1.0) / 2;
  const RegimeThresholds r = regime_thresholds(alpha, beta, gamma, 1e-5, 1e-6);
  CHECK(r.lambda == doctest::Approx(std::sqrt(2.0 / (gamma * alpha * alpha))));
  CHECK(r.magnus_condition == doctest::Approx(r.lambda * r.lambda));
  CHECK(r.nodd_bound == doctest::Approx(gamma * 1e-5 / std::sqrt(2.0)));
  CHECK(r.dcg_bound == doctest::Approx(std::pow(alpha * gamma * 1e-5, 2) / (2 * std::sqrt(2.0))));
  CHECK(r.dd_error_threshold == doctest::Approx(r.lambda * std::sqrt(1e-5) - 1e-5));
  CHECK(r.type1_threshold == doctest::Approx(r.dd_error_threshold));
  // type II lies between 0 and h and is approximately linear in h for small h
  CHECK(r.type2_threshold > 0.0);
  CHECK(r.type2_threshold < 1e-5);
  const double ratio = regime_thresholds(alpha, beta, gamma, 1e-9).type2_threshold / 1e-9;
  CHECK(ratio == doctest::Approx(1.0 / (beta - 1)).epsilon(1e-3));
  // the threshold solves the bound comparison exactly
  const double eps = r.type2_threshold, h = 1e-5;
  CHECK(h - (beta - 1) * eps == doctest::Approx(0.5 * gamma * alpha * alpha * (h + eps) * (h + eps)).epsilon(1e-9));
  // and joins the type-I form continuously as beta -> 1
  CHECK(regime_thresholds(alpha, 1.0 + 1e-9, gamma, 1e-5).type2_threshold ==
        doctest::Approx(r.type1_threshold).epsilon(1e-6));

  // beta = 1 falls back to the type-I form
  const RegimeThresholds one = regime_thresholds(alpha, 1.0, gamma, 1e-5);
  CHECK(one.type2_threshold == doctest::Approx(one.type1_threshold));

  CHECK(r.dd_limit == doctest::Approx(1e-6));
  CHECK(r.type1_limit == doctest::Approx(1e-3 / r.lambda));
  CHECK(r.type2_limit == doctest::Approx(1e-3 / (beta * r.lambda)));

  CHECK_THROWS_AS(regime_thresholds(0.5, 1, 1, 1e-3), Error);
  CHECK_THROWS_AS(regime_thresholds(2, 1, 0, 1e-3), Error);
}

TEST_CASE("nodd distance respects the first-order bound") {
  // |H| tau / sqrt 2 bounds the distance of exp(-i tau H) from the identity
  for (int k = 0; k < 50; ++k) {
    const NoiseSample s = sample_noise(4, 1.0, 0.3, k % 2 == 0, 500 + k);
    const double norm = operator_norm(s.h_err);
    for (double x : {1e-4, 1e-2, 4e-2}) {
      const double tau = x / norm;
      const double d = distance(expm_hermitian_unchecked(s.h_err.matrix(), tau), CMatrix::Identity(16, 16));
      CHECK(d <= x / std::sqrt(2.0) * (1 + 1e-12));
    }
  }
}
