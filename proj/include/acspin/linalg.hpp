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

#include <complex>

#include <Eigen/Dense>

namespace acspin {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr cplx kI{0.0, 1.0};

// Hermiticity tolerance is relative: |A - A^dagger|_max <= tol * max(1, |A|_max).
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kNormTol = 1e-12;

double max_abs(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);
bool is_unitary(const CMatrix& m, double tol = kUnitaryTol);

/// Dense Hermitian operator. Construction rejects matrices that are not
/// Hermitian within kHermitianTol; the stored matrix is the exact Hermitian
/// part (A + A^dagger)/2.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const CMatrix& m);

  static HermitianOperator zero(Eigen::Index dim);
  static HermitianOperator identity(Eigen::Index dim);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  CMatrix m_;
};

/// Dense unitary. Construction rejects matrices with |U U^dagger - I|_max
/// above kUnitaryTol.
class Propagator {
 public:
  Propagator() = default;
  explicit Propagator(const CMatrix& m);

  static Propagator identity(Eigen::Index dim);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Propagator operator*(const Propagator& o) const;
  Propagator adjoint() const;

 private:
  CMatrix m_;
};

struct Eigensystem {
  RVector values;   // ascending
  CMatrix vectors;  // columns
};

// Spectral decomposition of a Hermitian matrix (checked).
Eigensystem eigh(const HermitianOperator& h);
// Same, for callers that already guarantee Hermiticity (internal hot paths).
Eigensystem eigh_unchecked(const CMatrix& h);
RVector eigvalsh(const CMatrix& h);

/// exp(-i H t) by spectral decomposition.
Propagator expm_hermitian(const HermitianOperator& h, double t);
CMatrix expm_hermitian_unchecked(const CMatrix& h, double t);
// exp(-i H t) from a precomputed eigensystem.
CMatrix expm_from_eigensystem(const Eigensystem& es, double t);

CMatrix commutator(const CMatrix& a, const CMatrix& b);

}  // namespace acspin
