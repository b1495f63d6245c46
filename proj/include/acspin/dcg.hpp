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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "acspin/dd_sequence.hpp"
#include "acspin/ensemble.hpp"
#include "acspin/linalg.hpp"
#include "acspin/protocol.hpp"

namespace acspin {

enum class SegmentKind { rotation, squeezing, idle };

/// Which flip-angle error a segment picks up.
enum class SegmentRole { nodd, dd, stretched, id_forward, id_reverse };

/// Rectangular pulse: H = amplitude * G for `duration`, with G = axis . J,
/// J_z^2, or 0 for idle.
struct PulseSegment {
  SegmentKind kind = SegmentKind::idle;
  Vec3 axis = Vec3::UnitZ();
  double amplitude = 0.0;  // signed, rad/s
  double duration = 0.0;
  SegmentRole role = SegmentRole::nodd;

  double angle() const { return amplitude * duration; }
};

using PulseProfile = std::vector<PulseSegment>;

/// Amplitude sign(angle) chi for |angle| / chi.
PulseSegment rotation_segment(const Vec3& axis, double angle, double chi);
PulseSegment squeezing_segment(double angle, double chi);
PulseSegment idle_segment(double duration);
double profile_duration(std::span<const PulseSegment> profile);

/// Collective operators of an ensemble of n spin-1/2.
struct ControlSpace {
  int n = 0;
  CMatrix jx, jy, jz, jz2;

  static ControlSpace ensemble(int n);
  Eigen::Index dim() const { return jz.rows(); }
  CMatrix generator(const PulseSegment& s) const;
};

struct BalancedPair {
  PulseProfile stretched;  // each segment at half amplitude for twice as long
  PulseProfile identity;   // the profile, then its time-reversed negation
};

BalancedPair balanced_pair(std::span<const PulseSegment> target);

struct DCGMetadata {
  std::string sequence;
  double tau = 0.0;      // target duration
  double tau_dcg = 0.0;  // full gate duration
  double tau_bp = 0.0;   // identity gates plus stretched gate
  double alpha = 0.0;    // tau_dcg / tau
  double beta = 0.0;     // tau_bp / tau
  double gamma = 0.0;    // chi tau
  int dd_pulses = 0;
  int identity_gates = 0;
  int stretched_gates = 0;
};

struct DCGSchedule {
  PulseProfile segments;
  DCGMetadata meta;
};

struct LeakageCheck {
  int samples = 3;
  std::uint64_t seed = 1;
  double tol = 1e-8;  // max |Phi_DCG^[1]| / |Phi_target^[1]|
};

/// DD pulses in Eulerian order, an identity gate at the first visit of each
/// non-identity group element, and the stretched target at the end. Rejects
/// targets whose first-order error is not cancelled (ErrorCode::leakage).
DCGSchedule assemble_dcg(const DDSequence& seq, std::span<const PulseSegment> target, double chi,
                         const ControlSpace& space, const LeakageCheck& check = {});

/// Noise-free propagator of a profile.
CMatrix ideal_propagator(const ControlSpace& space, std::span<const PulseSegment> profile);

/// First and second Magnus terms of the toggling-frame error, Phi = Phi^[1] + Phi^[2] + ...,
/// with U = V exp(-i Phi). 32-point Gauss-Legendre per segment.
CMatrix magnus_phi1(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err);
CMatrix magnus_phi2(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err);

/// H_eff = Phi^[1] / tau.
CMatrix finite_duration_error(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err);

/// Rotation finite-duration error: m_b = <R_zb>, M_ab = <R_za R_zb>, time
/// averages over the pulse.
struct RotationErrorForm {
  Vec3 m = Vec3::Zero();
  Mat3 big_m = Mat3::Zero();
};

RotationErrorForm rotation_error_form(const Vec3& axis, double angle);

/// sum_i delta_i m . j_i + sum Delta_ik [3 j_i . M j_k - j_i . j_k] for an RWA instance.
CMatrix rotation_error_hamiltonian(const NoiseInstance& inst, const RotationErrorForm& form);

/// |Pi_G(h)| / |h| with G represented on the control space.
double correctable_residual(const DDSequence& seq, const ControlSpace& space, const CMatrix& h);

enum class ControlErrorType { none, dd, bp_type1, bp_type2 };

std::string to_string(ControlErrorType t);
ControlErrorType control_error_from_string(const std::string& s);

/// Relative amplitude errors by segment role.
struct ControlErrors {
  double dd = 0.0;
  double nodd = 0.0;
  double stretched = 0.0;
  double id_forward = 0.0;
  double id_reverse = 0.0;

  static ControlErrors of_type(ControlErrorType t, double epsilon);
  double for_role(SegmentRole r) const;
};

/// prod_k exp(-i (a_k (1 + eps_k) G_k + H_err) T_k), latest segment on the left.
CMatrix simulate_schedule(const ControlSpace& space, std::span<const PulseSegment> profile, const CMatrix& h_err,
                          const ControlErrors& errors = {});

/// A pulse protocol on the ensemble: one profile per cycle.
struct PulseProtocol {
  std::string name;
  std::vector<PulseProfile> cycles;
  CVector initial;
};

/// Cycles R_y(theta) then S_z(eta) from the +y coherent state.
PulseProtocol ac_pulse_protocol(int n, std::span<const ControlCycle> cycles, double chi);
/// R_x(pi/2) then S_z(pi/2) from the +z coherent state.
PulseProtocol ghz_pulse_protocol(int n, double chi);

enum class Strategy { nodd, dcg_per_pulse, dcg_per_cycle };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct StrategySchedule {
  Strategy strategy = Strategy::nodd;
  PulseProfile segments;
  double duration = 0.0;
  int identity_gates = 0;
  int dcg_count = 0;
};

/// nodd: the bare pulses. dcg_per_pulse: rotations under `rot_seq`, squeezings
/// under `sq_seq`. dcg_per_cycle: each cycle as one composite under `rot_seq`.
StrategySchedule build_strategy(const PulseProtocol& protocol, Strategy strategy, const DDSequence& rot_seq,
                                const DDSequence& sq_seq, double chi, const ControlSpace& space);

}  // namespace acspin
