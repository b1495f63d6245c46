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

#include "acspin/rotation_group.hpp"

#include <deque>

#include <Eigen/Geometry>

#include "acspin/error.hpp"

namespace acspin {

Mat3 rotation_matrix(const Vec3& axis, double angle) {
  require(axis.norm() > 0.0, ErrorCode::invalid_argument, "rotation axis must be nonzero");
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

AxisAngle axis_angle(const Mat3& r) {
  const Eigen::AngleAxisd aa(r);
  return {aa.axis(), aa.angle()};
}

int find_element(std::span<const Mat3> elements, const Mat3& r, double tol) {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if ((elements[k] - r).cwiseAbs().maxCoeff() < tol) return static_cast<int>(k);
  return -1;
}

std::vector<Mat3> generate_group(std::span<const Mat3> generators, std::size_t max_order) {
  require(!generators.empty(), ErrorCode::invalid_argument, "generate_group: no generators");
  for (const Mat3& g : generators)
    require((g * g.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() < kGroupTol && g.determinant() > 0,
            ErrorCode::invalid_argument, "generate_group: generator is not a rotation");
  std::vector<Mat3> out{Mat3::Identity()};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const Mat3 cur = out[frontier.front()];
    frontier.pop_front();
    for (const Mat3& g : generators) {
      const Mat3 next = g * cur;
      if (find_element(out, next) >= 0) continue;
      require(out.size() < max_order, ErrorCode::invalid_argument, "generate_group: group is too large or infinite");
      out.push_back(next);
      frontier.push_back(out.size() - 1);
    }
  }
  return out;
}

CMatrix rotation_unitary(const CMatrix& jx, const CMatrix& jy, const CMatrix& jz, const Vec3& axis, double angle) {
  const Vec3 n = axis.normalized();
  const CMatrix gen = n(0) * jx + n(1) * jy + n(2) * jz;
  return expm_hermitian_unchecked(0.5 * (gen + gen.adjoint()), angle);
}

std::vector<CMatrix> represent_group(std::span<const Mat3> elements, const CMatrix& jx, const CMatrix& jy,
                                     const CMatrix& jz) {
  std::vector<CMatrix> out;
  out.reserve(elements.size());
  for (const Mat3& r : elements) {
    const AxisAngle aa = axis_angle(r);
    out.push_back(rotation_unitary(jx, jy, jz, aa.axis, aa.angle));
  }
  return out;
}

CMatrix symmetrize(std::span<const CMatrix> group, const CMatrix& s) {
  require(!group.empty(), ErrorCode::invalid_argument, "symmetrize: empty group");
  CMatrix acc = CMatrix::Zero(s.rows(), s.cols());
  for (const CMatrix& u : group) {
    require(u.rows() == s.rows(), ErrorCode::dimension_mismatch, "symmetrize: dimension mismatch");
    acc += u.adjoint() * s * u;
  }
  return acc / static_cast<double>(group.size());
}

}  // namespace acspin
