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

#include <span>
#include <vector>

#include "acspin/linalg.hpp"

namespace acspin {

struct AxisAngle {
  Vec3 axis = Vec3::UnitZ();
  double angle = 0.0;
};

/// SO(3) matrix of a right-handed rotation by `angle` about `axis`.
Mat3 rotation_matrix(const Vec3& axis, double angle);
AxisAngle axis_angle(const Mat3& r);

inline constexpr double kGroupTol = 1e-9;

/// Closure of the generators under multiplication, identity first, then in
/// breadth-first order. Rejects anything larger than max_order.
std::vector<Mat3> generate_group(std::span<const Mat3> generators, std::size_t max_order = 120);

/// Index of r in elements, or -1.
int find_element(std::span<const Mat3> elements, const Mat3& r, double tol = kGroupTol);

/// exp(-i angle (axis . J)) for the supplied spin components.
CMatrix rotation_unitary(const CMatrix& jx, const CMatrix& jy, const CMatrix& jz, const Vec3& axis, double angle);

/// Unitaries representing each group element on a space with the given spin
/// components. The SU(2) sign is arbitrary; only conjugation by them matters.
std::vector<CMatrix> represent_group(std::span<const Mat3> elements, const CMatrix& jx, const CMatrix& jy,
                                     const CMatrix& jz);

/// (1/|G|) sum_g U_g^dagger S U_g.
CMatrix symmetrize(std::span<const CMatrix> group, const CMatrix& s);

}  // namespace acspin
