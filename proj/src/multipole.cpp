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

#include "acspin/multipole.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "acspin/error.hpp"
#include "acspin/wigner.hpp"

namespace acspin {

namespace {

constexpr double kEigenvalueFloor = 1e-14;

void check_order(SpinQuantumNumber j, int L, int M) {
  require(L >= 0 && L <= j.two_j() && std::abs(M) <= L, ErrorCode::invalid_argument,
          "tensor operator: need 0 <= L <= 2j and |M| <= L");
}

std::vector<TensorBand> build_bands(SpinQuantumNumber j, int L) {
  const int d = j.dim();
  const double norm = std::sqrt((2.0 * L + 1.0) / d);
  const HalfInt jj = HalfInt::from_twice(j.two_j());
  std::vector<TensorBand> out;
  out.reserve(2 * L + 1);
  for (int M = -L; M <= L; ++M) {
    TensorBand band{L, M, std::vector<double>(d, 0.0)};
    for (int b = 0; b < d; ++b) {
      const int a = b - M;
      if (a < 0 || a >= d) continue;
      const HalfInt m_col = HalfInt::from_twice(j.two_j() - 2 * b);
      const HalfInt m_row = HalfInt::from_twice(j.two_j() - 2 * a);
      band.values[b] = norm * clebsch_gordan(jj, m_col, HalfInt::from_twice(2 * L),
                                             HalfInt::from_twice(2 * M), jj, m_row);
    }
    out.push_back(std::move(band));
  }
  return out;
}

// Tr(rho T_LM^dagger) for rho = psi psi^dagger.
cplx state_coefficient(const CVector& psi, const TensorBand& band) {
  cplx acc = 0.0;
  const int d = static_cast<int>(psi.size());
  for (int b = std::max(0, band.M); b < std::min(d, d + band.M); ++b)
    acc += psi(b - band.M) * std::conj(psi(b)) * band.values[b];
  return acc;
}

void add_band(CMatrix& out, const TensorBand& band, cplx scale) {
  const int d = static_cast<int>(out.rows());
  for (int b = std::max(0, band.M); b < std::min(d, d + band.M); ++b)
    out(b - band.M, b) += scale * band.values[b];
}

}  // namespace

std::shared_ptr<const std::vector<TensorBand>> tensor_bands(SpinQuantumNumber j, int L) {
  check_order(j, L, 0);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const std::vector<TensorBand>>> cache;
  const auto key = std::make_pair(j.two_j(), L);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto bands = std::make_shared<const std::vector<TensorBand>>(build_bands(j, L));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(bands)).first->second;
}

CMatrix tensor_operator(SpinQuantumNumber j, int L, int M) {
  check_order(j, L, M);
  CMatrix out = CMatrix::Zero(j.dim(), j.dim());
  add_band(out, (*tensor_bands(j, L))[M + L], 1.0);
  return out;
}

MultipoleDecomposition::MultipoleDecomposition(SpinQuantumNumber j, int max_L, std::vector<cplx> coefficients)
    : j_(j), max_L_(max_L), c_(std::move(coefficients)) {
  require(max_L >= 0 && max_L <= j.two_j(), ErrorCode::invalid_argument,
          "MultipoleDecomposition: order out of range");
  require(static_cast<int>(c_.size()) == multipole_count(max_L), ErrorCode::dimension_mismatch,
          "MultipoleDecomposition: wrong coefficient count");
}

cplx MultipoleDecomposition::operator()(int L, int M) const {
  require(L >= 0 && L <= max_L_ && std::abs(M) <= L, ErrorCode::invalid_argument,
          "MultipoleDecomposition: (L, M) out of range");
  return c_[multipole_index(L, M)];
}

double MultipoleDecomposition::order_weight(int L) const {
  double w = 0.0;
  for (int M = -L; M <= L; ++M) w += std::norm((*this)(L, M));
  return w;
}

MultipoleDecomposition decompose(const CMatrix& rho, SpinQuantumNumber j) {
  require(rho.rows() == j.dim() && rho.cols() == j.dim(), ErrorCode::dimension_mismatch,
          "decompose: density matrix must be (2j+1)x(2j+1)");
  const int d = j.dim();
  std::vector<cplx> c(multipole_count(j.two_j()));
  for (int L = 0; L <= j.two_j(); ++L) {
    for (const TensorBand& band : *tensor_bands(j, L)) {
      cplx acc = 0.0;
      for (int b = std::max(0, band.M); b < std::min(d, d + band.M); ++b)
        acc += rho(b - band.M, b) * band.values[b];
      c[multipole_index(L, band.M)] = acc;
    }
  }
  return MultipoleDecomposition(j, j.two_j(), std::move(c));
}

MultipoleDecomposition decompose(const SpinState& psi, int max_L) {
  const SpinQuantumNumber j = psi.spin();
  require(max_L >= 0 && max_L <= j.two_j(), ErrorCode::invalid_argument, "decompose: order out of range");
  std::vector<cplx> c(multipole_count(max_L));
  for (int L = 0; L <= max_L; ++L)
    for (const TensorBand& band : *tensor_bands(j, L))
      c[multipole_index(L, band.M)] = state_coefficient(psi.amplitudes(), band);
  return MultipoleDecomposition(j, max_L, std::move(c));
}

CMatrix reconstruct(const MultipoleDecomposition& d) {
  const SpinQuantumNumber j = d.spin();
  require(d.max_order() == j.two_j(), ErrorCode::invalid_argument,
          "reconstruct: needs the full decomposition");
  CMatrix out = CMatrix::Zero(j.dim(), j.dim());
  for (int L = 0; L <= j.two_j(); ++L)
    for (const TensorBand& band : *tensor_bands(j, L)) add_band(out, band, d(L, band.M));
  return out;
}

ReducedState::ReducedState(int order, CMatrix isotropic_deviation) : t_(order), aniso_(std::move(isotropic_deviation)) {
  require(aniso_.rows() == order + 1 && aniso_.cols() == order + 1, ErrorCode::dimension_mismatch,
          "ReducedState: matrix must be (t+1)x(t+1)");
}

CMatrix ReducedState::entries() const {
  return aniso_ + CMatrix::Identity(t_ + 1, t_ + 1) / static_cast<double>(t_ + 1);
}

RVector ReducedState::eigenvalues() const {
  RVector mu = eigvalsh(aniso_);
  return mu.array() + 1.0 / (t_ + 1);
}

std::vector<double> reduced_state_weights(SpinQuantumNumber j, int t) {
  const int n = j.two_j();
  require(t >= 0 && t <= n, ErrorCode::invalid_argument, "reduced state: need 0 <= t <= 2j");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, t});
  if (it != cache.end()) return it->second;
  std::vector<double> w(t + 1);
  for (int L = 0; L <= t; ++L) {
    const int num[] = {t, t, n - L, n + L + 1};
    const int den[] = {n, n, t - L, t + L + 1};
    w[L] = sqrt_factorial_ratio(num, den);
  }
  cache.emplace(std::make_pair(n, t), w);
  return w;
}

ReducedState reduced_state(const MultipoleDecomposition& d, int t) {
  const SpinQuantumNumber j = d.spin();
  require(t >= 1 && t <= j.two_j(), ErrorCode::invalid_argument, "reduced_state: need 1 <= t <= 2j");
  require(t <= d.max_order(), ErrorCode::invalid_argument, "reduced_state: decomposition truncated below t");
  const SpinQuantumNumber small(t);
  const std::vector<double> w = reduced_state_weights(j, t);
  CMatrix aniso = CMatrix::Zero(t + 1, t + 1);
  for (int L = 1; L <= t; ++L)
    for (const TensorBand& band : *tensor_bands(small, L)) add_band(aniso, band, w[L] * d(L, band.M));
  // The monopole term is I/(t+1) exactly for unit trace; carry any trace
  // defect of the input along with the anisotropic part.
  const cplx monopole = w[0] * d(0, 0) / std::sqrt(static_cast<double>(t + 1));
  aniso.diagonal().array() += monopole - 1.0 / (t + 1);
  return ReducedState(t, 0.5 * (aniso + aniso.adjoint()));
}

double ac_deviation_squared(const RVector& mu, int t) {
  const double s = 1.0 / std::sqrt(static_cast<double>(t + 1));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    // Eigenvalues of rho_t are resolved only to about 1e-16 absolute, which
    // the square root would magnify to 1e-8; anything below the floor is zero.
    const double lambda = s * s + mu(i);
    const double r = lambda > kEigenvalueFloor ? std::sqrt(lambda) : 0.0;
    acc += mu(i) * mu(i) / (2.0 * s * (s + r) * (s + r));
  }
  return acc / (std::sqrt(static_cast<double>(t + 1)) - 1.0);
}

double ac_measure(const CMatrix& rho, SpinQuantumNumber j, int t) {
  const ReducedState rs = reduced_state(decompose(rho, j), t);
  const double dev = std::sqrt(ac_deviation_squared(eigvalsh(rs.anisotropic_part()), t));
  return std::clamp(1.0 - dev, 0.0, 1.0);
}

double ac_deviation(const SpinState& psi, int t) {
  const ReducedState rs = reduced_state(decompose(psi, t), t);
  return std::min(1.0, std::sqrt(ac_deviation_squared(eigvalsh(rs.anisotropic_part()), t)));
}

double ac_measure(const SpinState& psi, int t) { return 1.0 - ac_deviation(psi, t); }

AnticoherenceEvaluator::AnticoherenceEvaluator(SpinQuantumNumber j, int t)
    : j_(j), t_(t), weights_(reduced_state_weights(j, t)) {
  require(t >= 1 && t <= j.two_j(), ErrorCode::invalid_argument, "anticoherence: need 1 <= t <= 2j");
  const SpinQuantumNumber small(t);
  for (int L = 1; L <= t; ++L) {
    state_bands_.push_back(tensor_bands(j, L));
    reduced_bands_.push_back(tensor_bands(small, L));
  }
}

double AnticoherenceEvaluator::deviation_squared(const CVector& psi) const {
  CMatrix aniso = CMatrix::Zero(t_ + 1, t_ + 1);
  for (int L = 1; L <= t_; ++L) {
    const auto& sb = *state_bands_[L - 1];
    const auto& rb = *reduced_bands_[L - 1];
    for (std::size_t k = 0; k < sb.size(); ++k) add_band(aniso, rb[k], weights_[L] * state_coefficient(psi, sb[k]));
  }
  return ac_deviation_squared(eigvalsh(aniso), t_);
}

double AnticoherenceEvaluator::deviation(const CVector& psi) const {
  return std::min(1.0, std::sqrt(deviation_squared(psi)));
}

CMatrix multipole_generator(SpinQuantumNumber j, MultipoleFlow flow) {
  const SpinOperators ops = spin_operators(j);
  const CMatrix& h = flow == MultipoleFlow::rotation ? ops.jy.matrix() : ops.jz2.matrix();
  const int n = multipole_count(j.two_j());
  std::vector<CMatrix> basis(n);
  for (int L = 0; L <= j.two_j(); ++L)
    for (int M = -L; M <= L; ++M) basis[multipole_index(L, M)] = tensor_operator(j, L, M);
  // d rho/dt = -i [H, rho]  =>  G_{a,b} = -i Tr(T_a^dagger [H, T_b]).
  CMatrix g = CMatrix::Zero(n, n);
  for (int b = 0; b < n; ++b) {
    const CMatrix c = commutator(h, basis[b]);
    for (int a = 0; a < n; ++a) g(a, b) = -kI * (basis[a].adjoint() * c).trace();
  }
  return g;
}

MultipoleDecomposition evolve_multipoles(const MultipoleDecomposition& d, MultipoleFlow flow, double tau) {
  const SpinQuantumNumber j = d.spin();
  require(d.max_order() == j.two_j(), ErrorCode::invalid_argument,
          "evolve_multipoles: needs the full decomposition");
  // G = -i K with K Hermitian, so exp(G tau) = exp(-i K tau).
  const CMatrix k = kI * multipole_generator(j, flow);
  const CMatrix u = expm_hermitian_unchecked(0.5 * (k + k.adjoint()), tau);
  const CVector in = Eigen::Map<const CVector>(d.coefficients().data(), static_cast<Eigen::Index>(d.coefficients().size()));
  const CVector out = u * in;
  return MultipoleDecomposition(j, d.max_order(), std::vector<cplx>(out.data(), out.data() + out.size()));
}

}  // namespace acspin
