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

#include "acspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acspin/error.hpp"

namespace acspin {

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, max_abs(m));
  return max_abs(m - m.adjoint()) <= tol * scale;
}

bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const CMatrix id = CMatrix::Identity(m.rows(), m.cols());
  return max_abs(m * m.adjoint() - id) <= tol;
}

HermitianOperator::HermitianOperator(const CMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::dimension_mismatch,
          "HermitianOperator: matrix is not square");
  if (!is_hermitian(m)) {
    std::ostringstream os;
    os << "HermitianOperator: |A - A^dagger|_max = " << max_abs(m - m.adjoint());
    fail(ErrorCode::not_hermitian, os.str());
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(CMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
  return HermitianOperator(CMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  require(dim() == o.dim(), ErrorCode::dimension_mismatch, "operator+: dimension mismatch");
  HermitianOperator r;
  r.m_ = m_ + o.m_;
  return r;
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  require(dim() == o.dim(), ErrorCode::dimension_mismatch, "operator-: dimension mismatch");
  HermitianOperator r;
  r.m_ = m_ - o.m_;
  return r;
}

HermitianOperator HermitianOperator::operator*(double s) const {
  HermitianOperator r;
  r.m_ = m_ * s;
  return r;
}

Propagator::Propagator(const CMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::dimension_mismatch, "Propagator: matrix is not square");
  if (!is_unitary(m)) {
    std::ostringstream os;
    os << "Propagator: |U U^dagger - I|_max = "
       << max_abs(m * m.adjoint() - CMatrix::Identity(m.rows(), m.cols()));
    fail(ErrorCode::invalid_argument, os.str());
  }
  m_ = m;
}

Propagator Propagator::identity(Eigen::Index dim) {
  return Propagator(CMatrix::Identity(dim, dim));
}

Propagator Propagator::operator*(const Propagator& o) const {
  require(dim() == o.dim(), ErrorCode::dimension_mismatch, "Propagator product: dimension mismatch");
  Propagator r;
  r.m_ = m_ * o.m_;
  return r;
}

Propagator Propagator::adjoint() const {
  Propagator r;
  r.m_ = m_.adjoint();
  return r;
}

Eigensystem eigh_unchecked(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  require(solver.info() == Eigen::Success, ErrorCode::invalid_argument,
          "eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigensystem eigh(const HermitianOperator& h) { return eigh_unchecked(h.matrix()); }

RVector eigvalsh(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::invalid_argument,
          "eigvalsh: eigensolver did not converge");
  return solver.eigenvalues();
}

CMatrix expm_from_eigensystem(const Eigensystem& es, double t) {
  const Eigen::Index n = es.values.size();
  CVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::exp(-kI * (es.values(k) * t));
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

CMatrix expm_hermitian_unchecked(const CMatrix& h, double t) {
  return expm_from_eigensystem(eigh_unchecked(h), t);
}

Propagator expm_hermitian(const HermitianOperator& h, double t) {
  require(std::isfinite(t), ErrorCode::invalid_argument, "expm_hermitian: non-finite time");
  return Propagator(expm_from_eigensystem(eigh(h), t));
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

}  // namespace acspin
