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

#include "acspin/ensemble.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <random>

#include <json.hpp>

#include "acspin/error.hpp"

namespace acspin {

namespace {

void check_size(int n) {
  require(n >= 1 && n <= kMaxEnsembleSize, ErrorCode::invalid_argument, "ensemble size must be in [1, 10]");
}

// Pauli/2 matrices.
Eigen::Matrix2cd half_pauli(int axis) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  switch (axis) {
    case 0:
      s(0, 1) = s(1, 0) = 0.5;
      break;
    case 1:
      s(0, 1) = -0.5 * kI;
      s(1, 0) = 0.5 * kI;
      break;
    default:
      s(0, 0) = 0.5;
      s(1, 1) = -0.5;
  }
  return s;
}

// (e . j_site) applied column by column without forming Kronecker products.
CMatrix site_along(int n, int site, const Vec3& e) {
  const Eigen::Matrix2cd s = e(0) * half_pauli(0) + e(1) * half_pauli(1) + e(2) * half_pauli(2);
  const Eigen::Index d = ensemble_dim(n);
  const Eigen::Index bit = Eigen::Index(1) << (n - 1 - site);
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const int b = (col & bit) ? 1 : 0;
    const Eigen::Index flipped = col ^ bit;
    out(col, col) += s(b, b);
    out(flipped, col) += s(1 - b, b);
  }
  return out;
}

Vec3 random_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec3 v;
  do {
    v = Vec3(g(rng), g(rng), g(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

}  // namespace

Eigen::Index ensemble_dim(int n) {
  check_size(n);
  return Eigen::Index(1) << n;
}

CMatrix site_operator(int n, int site, int axis) {
  check_size(n);
  require(site >= 0 && site < n && axis >= 0 && axis < 3, ErrorCode::invalid_argument, "site_operator: bad index");
  return site_along(n, site, Vec3::Unit(axis));
}

CollectiveOperators collective_operators(int n) {
  const Eigen::Index d = ensemble_dim(n);
  CMatrix j[3] = {CMatrix::Zero(d, d), CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < n; ++i) j[a] += site_operator(n, i, a);
  return {HermitianOperator(j[0]), HermitianOperator(j[1]), HermitianOperator(j[2]), HermitianOperator(j[2] * j[2])};
}

CMatrix symmetric_embedding(int n) {
  const Eigen::Index d = ensemble_dim(n);
  CMatrix out = CMatrix::Zero(d, n + 1);
  std::vector<int> count(n + 1, 0);
  for (Eigen::Index b = 0; b < d; ++b) ++count[std::popcount(static_cast<unsigned long>(b))];
  for (Eigen::Index b = 0; b < d; ++b) {
    const int k = std::popcount(static_cast<unsigned long>(b));
    out(b, k) = 1.0 / std::sqrt(static_cast<double>(count[k]));
  }
  return out;
}

HermitianOperator disorder_hamiltonian(const NoiseInstance& inst) {
  const Eigen::Index d = ensemble_dim(inst.n);
  CMatrix h = CMatrix::Zero(d, d);
  for (int i = 0; i < static_cast<int>(inst.disorder.size()); ++i)
    h += inst.disorder[i].delta * site_along(inst.n, i, inst.disorder[i].axis);
  return HermitianOperator(h);
}

HermitianOperator dipolar_hamiltonian(const NoiseInstance& inst) {
  const Eigen::Index d = ensemble_dim(inst.n);
  std::vector<std::array<CMatrix, 3>> ops(inst.n);
  for (int i = 0; i < inst.n; ++i)
    for (int a = 0; a < 3; ++a) ops[i][a] = site_operator(inst.n, i, a);
  CMatrix h = CMatrix::Zero(d, d);
  for (const DipolarTerm& t : inst.dipolar) {
    require(t.i >= 0 && t.i < t.k && t.k < inst.n, ErrorCode::invalid_argument, "dipolar term: bad pair");
    const CMatrix ei = site_along(inst.n, t.i, t.axis);
    const CMatrix ek = site_along(inst.n, t.k, t.axis);
    CMatrix dot = CMatrix::Zero(d, d);
    for (int a = 0; a < 3; ++a) dot += ops[t.i][a] * ops[t.k][a];
    h += t.coupling * (3.0 * ei * ek - dot);
  }
  return HermitianOperator(h);
}

double operator_norm(const CMatrix& h) {
  if (h.size() == 0) return 0.0;
  return eigvalsh(0.5 * (h + h.adjoint())).cwiseAbs().maxCoeff();
}

double operator_norm(const HermitianOperator& h) { return operator_norm(h.matrix()); }

NoiseSample sample_noise(int n, double disorder_norm, double dipolar_norm, bool rwa, std::uint64_t seed) {
  check_size(n);
  require(disorder_norm >= 0.0 && dipolar_norm >= 0.0 && std::isfinite(disorder_norm) && std::isfinite(dipolar_norm),
          ErrorCode::invalid_argument, "sample_noise: norms must be finite and nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  NoiseInstance inst;
  inst.n = n;
  inst.rwa = rwa;
  inst.seed = seed;
  for (int i = 0; i < n; ++i) {
    DisorderTerm t;
    t.delta = u(rng);
    t.axis = rwa ? Vec3::UnitZ() : random_axis(rng);
    inst.disorder.push_back(t);
  }
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      DipolarTerm t;
      t.i = i;
      t.k = k;
      t.coupling = u(rng);
      t.axis = rwa ? Vec3::UnitZ() : random_axis(rng);
      inst.dipolar.push_back(t);
    }

  // Rescale each family to its target norm. A family whose raw norm vanishes
  // (N = 1 has no pairs) can only meet a zero target.
  const double raw_dis = operator_norm(disorder_hamiltonian(inst));
  const double raw_dd = inst.dipolar.empty() ? 0.0 : operator_norm(dipolar_hamiltonian(inst));
  require(disorder_norm == 0.0 || raw_dis > 0.0, ErrorCode::invalid_argument, "sample_noise: degenerate disorder draw");
  require(dipolar_norm == 0.0 || raw_dd > 0.0, ErrorCode::invalid_argument,
          "sample_noise: no dipolar pairs to scale (N = 1)");
  for (auto& t : inst.disorder) t.delta *= raw_dis > 0.0 ? disorder_norm / raw_dis : 0.0;
  for (auto& t : inst.dipolar) t.coupling *= raw_dd > 0.0 ? dipolar_norm / raw_dd : 0.0;

  HermitianOperator h_dis = disorder_hamiltonian(inst);
  HermitianOperator h_dd = dipolar_hamiltonian(inst);
  HermitianOperator h_err = h_dis + h_dd;
  return NoiseSample{std::move(inst), std::move(h_dis), std::move(h_dd), std::move(h_err)};
}

std::string noise_to_json(const NoiseInstance& inst) {
  nlohmann::ordered_json doc;
  doc["schema"] = "acspin.noise/1";
  doc["n"] = inst.n;
  doc["rwa"] = inst.rwa;
  doc["seed"] = inst.seed;
  doc["disorder"] = nlohmann::ordered_json::array();
  for (const auto& t : inst.disorder)
    doc["disorder"].push_back({{"delta", t.delta}, {"axis", {t.axis(0), t.axis(1), t.axis(2)}}});
  doc["dipolar"] = nlohmann::ordered_json::array();
  for (const auto& t : inst.dipolar)
    doc["dipolar"].push_back(
        {{"i", t.i}, {"k", t.k}, {"coupling", t.coupling}, {"axis", {t.axis(0), t.axis(1), t.axis(2)}}});
  return doc.dump(2) + "\n";
}

NoiseInstance noise_from_json(const std::string& text) {
  auto axis_of = [](const nlohmann::json& a) {
    const Vec3 v(a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>());
    require(std::abs(v.norm() - 1.0) < 1e-12, ErrorCode::parse, "noise instance: axis is not a unit vector");
    return v;
  };
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    NoiseInstance inst;
    inst.n = doc.at("n").get<int>();
    check_size(inst.n);
    inst.rwa = doc.at("rwa").get<bool>();
    inst.seed = doc.value("seed", std::uint64_t{0});
    for (const auto& t : doc.at("disorder")) inst.disorder.push_back({t.at("delta").get<double>(), axis_of(t.at("axis"))});
    for (const auto& t : doc.at("dipolar"))
      inst.dipolar.push_back({t.at("i").get<int>(), t.at("k").get<int>(), t.at("coupling").get<double>(), axis_of(t.at("axis"))});
    require(static_cast<int>(inst.disorder.size()) <= inst.n, ErrorCode::parse, "noise instance: too many disorder terms");
    return inst;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("noise instance: ") + e.what());
  }
}

}  // namespace acspin
