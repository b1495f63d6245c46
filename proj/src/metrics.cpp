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


#include "acspin/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "acspin/error.hpp"

namespace acspin {

namespace {

void check_unitary_pair(const CMatrix& u, const CMatrix& v) {
  require(u.rows() == v.rows() && u.cols() == v.cols() && u.rows() == u.cols(), ErrorCode::dimension_mismatch,
          "metric: operators must be square and of equal dimension");
  require(is_unitary(u, 1e-8) && is_unitary(v, 1e-8), ErrorCode::invalid_argument, "metric: operators must be unitary");
}

}  // namespace

CMatrix unitary_log(const CMatrix& w) {
  const Eigen::ComplexEigenSolver<CMatrix> es(w);
  require(es.info() == Eigen::Success, ErrorCode::unconverged, "unitary_log: eigensolver failed");
  // Eigenvectors of a normal matrix from a Schur-based solver are not exactly
  // orthonormal inside degenerate clusters; orthonormalize them.
  const Eigen::HouseholderQR<CMatrix> qr(es.eigenvectors());
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k)
    if (std::abs(r(k, k)) > 0.0) q.col(k) *= r(k, k) / std::abs(r(k, k));
  RVector phase(w.rows());
  for (Eigen::Index k = 0; k < w.rows(); ++k) phase(k) = -std::arg(es.eigenvalues()(k));
  const CMatrix phi = q * phase.asDiagonal() * q.adjoint();
  return 0.5 * (phi + phi.adjoint());
}

double distance(const CMatrix& u, const CMatrix& v) {
  check_unitary_pair(u, v);
  const CMatrix w = v.adjoint() * u;
  const Eigen::ComplexEigenSolver<CMatrix> es(w, false);
  require(es.info() == Eigen::Success, ErrorCode::unconverged, "distance: eigensolver failed");
  const Eigen::Index d = w.rows();
  // |sum_k e^{i p_k}|^2 = d^2 - 2 sum_{k,l} sin^2((p_k - p_l) / 2)
  double s = 0.0;
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = k + 1; l < d; ++l) {
      const double h = std::sin(0.5 * std::arg(es.eigenvalues()(k) / es.eigenvalues()(l)));
      s += 4.0 * h * h;
    }
  const double x = std::clamp(s / (static_cast<double>(d) * static_cast<double>(d)), 0.0, 1.0);
  // 1 - sqrt(1 - x) without cancellation
  return std::sqrt(x / (1.0 + std::sqrt(1.0 - x)));
}

double infidelity(const CMatrix& u, const CMatrix& v, const CVector& psi0) {
  check_unitary_pair(u, v);
  require(psi0.size() == u.rows(), ErrorCode::dimension_mismatch, "infidelity: state dimension mismatch");
  require(std::abs(psi0.norm() - 1.0) < 1e-10, ErrorCode::invalid_argument, "infidelity: state must be normalized");
  const CVector a = u * psi0;
  const CVector b = v * psi0;
  // 1 - |<b|a>|^2 = |a - b e^{i phase}|^2 - |a - b e^{i phase}|^4 / 4 with the
  // optimal phase, which avoids cancellation for nearly equal states.
  const cplx ov = b.dot(a);
  const cplx ph = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx(1.0);
  const double e2 = (a - b * ph).squaredNorm();
  return std::clamp(e2 - 0.25 * e2 * e2, 0.0, 1.0);
}

double magnus_bound_general(int n, double tau_norm) {
  require(n >= 1, ErrorCode::invalid_argument, "magnus_bound: order must be >= 1");
  require(tau_norm >= 0.0, ErrorCode::invalid_argument, "magnus_bound: tau |H| must be nonnegative");
  return std::numbers::pi * std::pow(tau_norm / kMagnusRadius, n);
}

double magnus_bound(int n, double tau_norm) {
  if (n == 2) {
    require(tau_norm >= 0.0, ErrorCode::invalid_argument, "magnus_bound: tau |H| must be nonnegative");
    return 0.5 * tau_norm * tau_norm;
  }
  return magnus_bound_general(n, tau_norm);
}

RegimeThresholds regime_thresholds(double alpha, double beta, double gamma, double h, double epsilon) {
  require(alpha >= 1.0 && beta >= 1.0 && gamma > 0.0 && h >= 0.0 && epsilon >= 0.0, ErrorCode::invalid_argument,
          "regime_thresholds: need alpha, beta >= 1, gamma > 0, h, epsilon >= 0");
  RegimeThresholds r;
  const double ga2 = gamma * alpha * alpha;
  r.nodd_bound = gamma * h / std::numbers::sqrt2;
  r.dcg_bound = 0.5 * std::pow(alpha * gamma * h, 2) / std::numbers::sqrt2;
  r.magnus_condition = 2.0 / ga2;
  r.lambda = std::sqrt(2.0 / ga2);
  r.dd_error_threshold = std::max(0.0, r.lambda * std::sqrt(h) - h);
  r.type1_threshold = r.dd_error_threshold;
  if (beta == 1.0) {
    // No identity-gate errors: the type-I form.
    r.type2_threshold = r.type1_threshold;
  } else {
    // Root of h - (beta - 1) eps = (gamma alpha^2 / 2) (h + eps)^2, written
    // without the sqrt(1 + x) - 1 cancellation. ~ h / (beta - 1) for small h.
    const double b1 = beta - 1.0;
    const double x = 2.0 * ga2 * beta / (b1 * b1) * h;
    r.type2_threshold = std::max(0.0, 2.0 * beta * h / (b1 * (1.0 + std::sqrt(1.0 + x))) - h);
  }
  r.dd_limit = epsilon;
  r.type1_limit = std::sqrt(epsilon) / r.lambda;
  r.type2_limit = std::sqrt(epsilon) / (beta * r.lambda);
  return r;
}

}  // namespace acspin
