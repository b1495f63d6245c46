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


#include "acspin/dcg.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "acspin/angmom.hpp"
#include "acspin/error.hpp"
#include "acspin/rotation_group.hpp"

namespace acspin {

namespace {

constexpr double kPi = std::numbers::pi;

// 32-point Gauss-Legendre on [-1, 1].
struct GaussLegendre32 {
  std::array<double, 32> x{};
  std::array<double, 32> w{};
  GaussLegendre32() {
    using gl = boost::math::quadrature::gauss<double, 32>;
    const auto& a = gl::abscissa();
    const auto& wt = gl::weights();
    for (std::size_t k = 0; k < a.size(); ++k) {
      x[2 * k] = a[k];
      x[2 * k + 1] = -a[k];
      w[2 * k] = w[2 * k + 1] = wt[k];
    }
  }
};

const GaussLegendre32& gl32() {
  static const GaussLegendre32 rule;
  return rule;
}

// Segment generator in its eigenbasis: U(s) = q exp(-i a diag(lambda) s) q^dag.
struct Frame {
  CMatrix q;
  RVector lambda;
  double a = 0.0;
  double t = 0.0;

  CMatrix propagator(double s) const {
    CVector ph(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) ph(k) = std::exp(-kI * (a * lambda(k) * s));
    return q * ph.asDiagonal() * q.adjoint();
  }
  // U(s)^dag H U(s) in the eigenbasis, given hq = q^dag H q.
  CMatrix toggled(const CMatrix& hq, double s) const {
    CMatrix out(hq.rows(), hq.cols());
    for (Eigen::Index c = 0; c < hq.cols(); ++c)
      for (Eigen::Index r = 0; r < hq.rows(); ++r) out(r, c) = hq(r, c) * std::exp(kI * (a * (lambda(r) - lambda(c)) * s));
    return out;
  }
};

Frame frame_of(const ControlSpace& space, const PulseSegment& s) {
  Frame f;
  f.a = s.amplitude;
  f.t = s.duration;
  if (s.kind == SegmentKind::idle || s.amplitude == 0.0) {
    f.q = CMatrix::Identity(space.dim(), space.dim());
    f.lambda = RVector::Zero(space.dim());
    f.a = 0.0;
    return f;
  }
  Eigensystem es = eigh_unchecked(space.generator(s));
  f.q = std::move(es.vectors);
  f.lambda = std::move(es.values);
  return f;
}

void check_profile(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h) {
  require(h.rows() == space.dim() && h.cols() == space.dim(), ErrorCode::dimension_mismatch,
          "error Hamiltonian does not match the control space");
  for (const PulseSegment& s : profile) {
    require(s.duration >= 0.0 && std::isfinite(s.duration) && std::isfinite(s.amplitude), ErrorCode::invalid_argument,
            "pulse segment: duration must be finite and nonnegative");
    require(s.kind != SegmentKind::rotation || std::abs(s.axis.norm() - 1.0) < 1e-12, ErrorCode::invalid_argument,
            "pulse segment: rotation axis must be a unit vector");
  }
}

// A_k for every segment, in the lab frame, plus the per-segment inner double
// integrals when `inner` is set.
struct SegmentIntegrals {
  std::vector<CMatrix> a;
  std::vector<CMatrix> d;
};

SegmentIntegrals integrate(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h,
                           bool inner) {
  check_profile(space, profile, h);
  const GaussLegendre32& rule = gl32();
  const Eigen::Index dim = space.dim();
  SegmentIntegrals out;
  CMatrix uprev = CMatrix::Identity(dim, dim);
  for (const PulseSegment& s : profile) {
    const Frame f = frame_of(space, s);
    const CMatrix hq = f.q.adjoint() * h * f.q;
    const double half = 0.5 * f.t;
    CMatrix acc = CMatrix::Zero(dim, dim);
    CMatrix dacc = CMatrix::Zero(dim, dim);
    for (int k = 0; k < 32; ++k) {
      const double s1 = half * (rule.x[k] + 1.0);
      const CMatrix x1 = f.toggled(hq, s1);
      acc += rule.w[k] * x1;
      if (inner) {
        const double h1 = 0.5 * s1;
        CMatrix b = CMatrix::Zero(dim, dim);
        for (int l = 0; l < 32; ++l) b += rule.w[l] * f.toggled(hq, h1 * (rule.x[l] + 1.0));
        dacc += rule.w[k] * h1 * commutator(x1, b);
      }
    }
    const CMatrix conj = f.q.adjoint() * uprev;
    out.a.push_back(half * conj.adjoint() * acc * conj);
    if (inner) out.d.push_back(half * conj.adjoint() * dacc * conj);
    uprev = f.propagator(f.t) * uprev;
  }
  return out;
}

struct CacheEntry {
  SegmentKind kind;
  Vec3 axis;
  double amplitude;
  double duration;
  CMatrix u;
};

PulseProfile with_role(std::span<const PulseSegment> p, SegmentRole role) {
  PulseProfile out(p.begin(), p.end());
  for (auto& s : out) s.role = role;
  return out;
}

}  // namespace

PulseSegment rotation_segment(const Vec3& axis, double angle, double chi) {
  require(chi > 0.0 && std::isfinite(chi), ErrorCode::invalid_argument, "control amplitude must be positive");
  require(axis.norm() > 0.0 && std::isfinite(angle), ErrorCode::invalid_argument, "rotation needs an axis and a finite angle");
  PulseSegment s;
  s.kind = SegmentKind::rotation;
  s.axis = axis.normalized();
  s.amplitude = angle < 0.0 ? -chi : chi;
  s.duration = std::abs(angle) / chi;
  return s;
}

PulseSegment squeezing_segment(double angle, double chi) {
  require(chi > 0.0 && std::isfinite(chi), ErrorCode::invalid_argument, "control amplitude must be positive");
  require(std::isfinite(angle), ErrorCode::invalid_argument, "squeezing angle must be finite");
  PulseSegment s;
  s.kind = SegmentKind::squeezing;
  s.amplitude = angle < 0.0 ? -chi : chi;
  s.duration = std::abs(angle) / chi;
  return s;
}

PulseSegment idle_segment(double duration) {
  require(duration >= 0.0, ErrorCode::invalid_argument, "idle duration must be nonnegative");
  PulseSegment s;
  s.duration = duration;
  return s;
}

double profile_duration(std::span<const PulseSegment> profile) {
  double t = 0.0;
  for (const auto& s : profile) t += s.duration;
  return t;
}

ControlSpace ControlSpace::ensemble(int n) {
  const CollectiveOperators c = collective_operators(n);
  return {n, c.jx.matrix(), c.jy.matrix(), c.jz.matrix(), c.jz2.matrix()};
}

CMatrix ControlSpace::generator(const PulseSegment& s) const {
  switch (s.kind) {
    case SegmentKind::rotation: {
      const Vec3 e = s.axis.normalized();
      return e(0) * jx + e(1) * jy + e(2) * jz;
    }
    case SegmentKind::squeezing:
      return jz2;
    case SegmentKind::idle:
      break;
  }
  return CMatrix::Zero(dim(), dim());
}

BalancedPair balanced_pair(std::span<const PulseSegment> target) {
  require(!target.empty(), ErrorCode::invalid_argument, "balanced_pair: empty target");
  BalancedPair bp;
  for (const PulseSegment& s : target) {
    PulseSegment st = s;
    st.amplitude *= 0.5;
    st.duration *= 2.0;
    st.role = SegmentRole::stretched;
    bp.stretched.push_back(st);
    PulseSegment fw = s;
    fw.role = SegmentRole::id_forward;
    bp.identity.push_back(fw);
  }
  for (auto it = target.rbegin(); it != target.rend(); ++it) {
    PulseSegment rv = *it;
    rv.amplitude = -rv.amplitude;
    rv.role = SegmentRole::id_reverse;
    bp.identity.push_back(rv);
  }
  return bp;
}

CMatrix ideal_propagator(const ControlSpace& space, std::span<const PulseSegment> profile) {
  return simulate_schedule(space, profile, CMatrix::Zero(space.dim(), space.dim()));
}

CMatrix magnus_phi1(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err) {
  const SegmentIntegrals in = integrate(space, profile, h_err, false);
  CMatrix out = CMatrix::Zero(space.dim(), space.dim());
  for (const CMatrix& a : in.a) out += a;
  return 0.5 * (out + out.adjoint());
}

CMatrix magnus_phi2(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err) {
  const SegmentIntegrals in = integrate(space, profile, h_err, true);
  const Eigen::Index d = space.dim();
  CMatrix sum = CMatrix::Zero(d, d);
  CMatrix earlier = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < in.a.size(); ++k) {
    sum += in.d[k] + commutator(in.a[k], earlier);
    earlier += in.a[k];
  }
  const CMatrix phi = -0.5 * kI * sum;
  return 0.5 * (phi + phi.adjoint());
}

CMatrix finite_duration_error(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err) {
  const double t = profile_duration(profile);
  require(t > 0.0, ErrorCode::invalid_argument, "finite_duration_error: profile has zero duration");
  return magnus_phi1(space, profile, h_err) / t;
}

RotationErrorForm rotation_error_form(const Vec3& axis, double angle) {
  require(axis.norm() > 0.0, ErrorCode::invalid_argument, "rotation_error_form: zero axis");
  const GaussLegendre32& rule = gl32();
  RotationErrorForm f;
  for (int k = 0; k < 32; ++k) {
    const double frac = 0.5 * (rule.x[k] + 1.0);
    const Vec3 row = rotation_matrix(axis, angle * frac).row(2).transpose();
    f.m += 0.5 * rule.w[k] * row;
    f.big_m += 0.5 * rule.w[k] * row * row.transpose();
  }
  return f;
}

CMatrix rotation_error_hamiltonian(const NoiseInstance& inst, const RotationErrorForm& form) {
  const int n = inst.n;
  const Eigen::Index d = ensemble_dim(n);
  std::vector<std::array<CMatrix, 3>> ops(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 3; ++a) ops[i][a] = site_operator(n, i, a);
  CMatrix h = CMatrix::Zero(d, d);
  for (int i = 0; i < static_cast<int>(inst.disorder.size()); ++i) {
    require((inst.disorder[i].axis - Vec3::UnitZ()).norm() < 1e-12, ErrorCode::invalid_argument,
            "rotation_error_hamiltonian: needs an RWA instance");
    for (int a = 0; a < 3; ++a) h += inst.disorder[i].delta * form.m(a) * ops[i][a];
  }
  for (const DipolarTerm& t : inst.dipolar) {
    require((t.axis - Vec3::UnitZ()).norm() < 1e-12, ErrorCode::invalid_argument,
            "rotation_error_hamiltonian: needs an RWA instance");
    for (int a = 0; a < 3; ++a) {
      h -= t.coupling * ops[t.i][a] * ops[t.k][a];
      for (int b = 0; b < 3; ++b) h += 3.0 * t.coupling * form.big_m(a, b) * ops[t.i][a] * ops[t.k][b];
    }
  }
  return h;
}

double correctable_residual(const DDSequence& seq, const ControlSpace& space, const CMatrix& h) {
  const double norm = operator_norm(h);
  require(norm > 0.0, ErrorCode::invalid_argument, "correctable_residual: zero operator");
  const std::vector<CMatrix> reps = represent_group(seq.group, space.jx, space.jy, space.jz);
  return operator_norm(symmetrize(reps, h)) / norm;
}

DCGSchedule assemble_dcg(const DDSequence& seq, std::span<const PulseSegment> target, double chi,
                         const ControlSpace& space, const LeakageCheck& check) {
  require(!target.empty(), ErrorCode::invalid_argument, "assemble_dcg: empty target");
  require(!seq.group.empty() && !seq.pulse_order.empty(), ErrorCode::invalid_argument, "assemble_dcg: empty sequence");
  const BalancedPair bp = balanced_pair(target);

  DCGSchedule out;
  std::vector<Mat3> gens;
  for (const AxisAngle& g : seq.generators) gens.push_back(rotation_matrix(g.axis, g.angle));
  std::vector<char> visited(seq.group.size(), 0);
  visited[0] = 1;
  int v = 0;
  for (int p : seq.pulse_order) {
    PulseSegment dd = rotation_segment(seq.generators[p].axis, seq.generators[p].angle, chi);
    dd.role = SegmentRole::dd;
    out.segments.push_back(dd);
    ++out.meta.dd_pulses;
    v = find_element(seq.group, gens[p] * seq.group[v]);
    require(v >= 0, ErrorCode::invalid_argument, "assemble_dcg: pulse leaves the group");
    if (!visited[v]) {
      visited[v] = 1;
      out.segments.insert(out.segments.end(), bp.identity.begin(), bp.identity.end());
      ++out.meta.identity_gates;
    }
  }
  require(v == 0, ErrorCode::invalid_argument, "assemble_dcg: pulse order is not a closed walk");
  out.segments.insert(out.segments.end(), bp.stretched.begin(), bp.stretched.end());
  out.meta.stretched_gates = 1;

  out.meta.sequence = seq.name;
  out.meta.tau = profile_duration(target);
  out.meta.tau_dcg = profile_duration(out.segments);
  out.meta.tau_bp = out.meta.identity_gates * profile_duration(bp.identity) + profile_duration(bp.stretched);
  out.meta.alpha = out.meta.tau_dcg / out.meta.tau;
  out.meta.beta = out.meta.tau_bp / out.meta.tau;
  out.meta.gamma = chi * out.meta.tau;

  // Noise-free equivalence up to a global phase.
  const CMatrix w = ideal_propagator(space, target).adjoint() * ideal_propagator(space, out.segments);
  require(std::abs(std::abs(w(0, 0)) - 1.0) < 1e-10 &&
              max_abs(w - w(0, 0) * CMatrix::Identity(w.rows(), w.cols())) < 1e-10,
          ErrorCode::invalid_argument, "assemble_dcg: noise-free schedule does not implement the target");

  // First-order cancellation on sampled RWA noise.
  for (int s = 0; s < check.samples; ++s) {
    const NoiseSample ns = sample_noise(space.n, 1.0, space.n >= 2 ? 1.0 : 0.0, true, check.seed + s);
    const CMatrix& h = ns.h_err.matrix();
    const double ref = operator_norm(magnus_phi1(space, target, h));
    const double got = operator_norm(magnus_phi1(space, out.segments, h));
    if (!(got <= check.tol * ref)) {
      std::ostringstream msg;
      msg << "assemble_dcg: first-order error leaks out of the correctable subspace of " << seq.name
          << " (|Phi_DCG| / |Phi_target| = " << got / ref
          << ", target H_eff residual = " << correctable_residual(seq, space, finite_duration_error(space, target, h))
          << ")";
      fail(ErrorCode::leakage, msg.str());
    }
  }
  return out;
}

std::string to_string(ControlErrorType t) {
  switch (t) {
    case ControlErrorType::none:
      return "none";
    case ControlErrorType::dd:
      return "dd";
    case ControlErrorType::bp_type1:
      return "bp_type1";
    case ControlErrorType::bp_type2:
      return "bp_type2";
  }
  return "unknown";
}

ControlErrorType control_error_from_string(const std::string& s) {
  for (ControlErrorType t : {ControlErrorType::none, ControlErrorType::dd, ControlErrorType::bp_type1,
                             ControlErrorType::bp_type2})
    if (to_string(t) == s) return t;
  fail(ErrorCode::invalid_argument, "unknown control error type: " + s);
}

ControlErrors ControlErrors::of_type(ControlErrorType t, double epsilon) {
  ControlErrors e;
  switch (t) {
    case ControlErrorType::none:
      break;
    case ControlErrorType::dd:
      e.dd = epsilon;
      break;
    case ControlErrorType::bp_type1:
      e = {epsilon, epsilon, epsilon, epsilon, epsilon};
      break;
    case ControlErrorType::bp_type2:
      e = {epsilon, epsilon, epsilon, epsilon, -epsilon};
      break;
  }
  return e;
}

double ControlErrors::for_role(SegmentRole r) const {
  switch (r) {
    case SegmentRole::nodd:
      return nodd;
    case SegmentRole::dd:
      return dd;
    case SegmentRole::stretched:
      return stretched;
    case SegmentRole::id_forward:
      return id_forward;
    case SegmentRole::id_reverse:
      return id_reverse;
  }
  return 0.0;
}

CMatrix simulate_schedule(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err,
                          const ControlErrors& errors) {
  check_profile(space, profile, h_err);
  const Eigen::Index d = space.dim();
  std::vector<CacheEntry> cache;
  CMatrix u = CMatrix::Identity(d, d);
  for (const PulseSegment& s : profile) {
    if (s.duration == 0.0) continue;
    const double amp = s.kind == SegmentKind::idle ? 0.0 : s.amplitude * (1.0 + errors.for_role(s.role));
    const CacheEntry* hit = nullptr;
    for (const CacheEntry& c : cache)
      if (c.kind == s.kind && c.amplitude == amp && c.duration == s.duration &&
          (s.kind != SegmentKind::rotation || c.axis == s.axis)) {
        hit = &c;
        break;
      }
    if (!hit) {
      const CMatrix h = amp * space.generator(s) + h_err;
      cache.push_back({s.kind, s.axis, amp, s.duration, expm_hermitian_unchecked(0.5 * (h + h.adjoint()), s.duration)});
      hit = &cache.back();
    }
    u = hit->u * u;
  }
  return u;
}

PulseProtocol ac_pulse_protocol(int n, std::span<const ControlCycle> cycles, double chi) {
  require(!cycles.empty(), ErrorCode::invalid_argument, "ac_pulse_protocol: no cycles");
  PulseProtocol p;
  p.name = "ac";
  p.initial = symmetric_embedding(n) * coherent_state_y(SpinQuantumNumber(n)).amplitudes();
  for (const ControlCycle& c : cycles) {
    PulseProfile prof;
    if (c.theta != 0.0) prof.push_back(rotation_segment(Vec3::UnitY(), c.theta, chi));
    if (c.eta != 0.0) prof.push_back(squeezing_segment(c.eta, chi));
    if (!prof.empty()) p.cycles.push_back(std::move(prof));
  }
  require(!p.cycles.empty(), ErrorCode::invalid_argument, "ac_pulse_protocol: all pulses are empty");
  return p;
}

PulseProtocol ghz_pulse_protocol(int n, double chi) {
  PulseProtocol p;
  p.name = "ghz";
  p.initial = CVector::Zero(ensemble_dim(n));
  p.initial(0) = 1.0;
  p.cycles.push_back({rotation_segment(Vec3::UnitX(), kPi / 2, chi), squeezing_segment(kPi / 2, chi)});
  return p;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::nodd:
      return "nodd";
    case Strategy::dcg_per_pulse:
      return "dcg_per_pulse";
    case Strategy::dcg_per_cycle:
      return "dcg_per_cycle";
  }
  return "unknown";
}

Strategy strategy_from_string(const std::string& s) {
  for (Strategy t : {Strategy::nodd, Strategy::dcg_per_pulse, Strategy::dcg_per_cycle})
    if (to_string(t) == s) return t;
  fail(ErrorCode::invalid_argument, "unknown strategy: " + s);
}

StrategySchedule build_strategy(const PulseProtocol& protocol, Strategy strategy, const DDSequence& rot_seq,
                                const DDSequence& sq_seq, double chi, const ControlSpace& space) {
  StrategySchedule out;
  out.strategy = strategy;
  auto append = [&](const DCGSchedule& g) {
    out.segments.insert(out.segments.end(), g.segments.begin(), g.segments.end());
    out.identity_gates += g.meta.identity_gates;
    ++out.dcg_count;
  };
  for (const PulseProfile& cycle : protocol.cycles) {
    switch (strategy) {
      case Strategy::nodd: {
        const PulseProfile p = with_role(cycle, SegmentRole::nodd);
        out.segments.insert(out.segments.end(), p.begin(), p.end());
        break;
      }
      case Strategy::dcg_per_pulse:
        for (const PulseSegment& s : cycle)
          append(assemble_dcg(s.kind == SegmentKind::squeezing ? sq_seq : rot_seq, std::span(&s, 1), chi, space));
        break;
      case Strategy::dcg_per_cycle:
        append(assemble_dcg(rot_seq, cycle, chi, space));
        break;
    }
  }
  out.duration = profile_duration(out.segments);
  return out;
}

}  // namespace acspin
