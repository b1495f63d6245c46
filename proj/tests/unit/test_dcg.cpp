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
#include <numbers>

#include <Eigen/Geometry>

#include "acspin/dcg.hpp"
#include "acspin/error.hpp"
#include "acspin/metrics.hpp"

using namespace acspin;

namespace {

constexpr double kPi = std::numbers::pi;

DDSequence tedd() {
  return make_sequence("TEDD", {{Vec3(1, 1, 1).normalized(), 2 * kPi / 3}, {Vec3(1, 1, -1).normalized(), 2 * kPi / 3}},
                       {NoiseFamily::disorder, NoiseFamily::dipolar_rwa, NoiseFamily::dipolar_general,
                        NoiseFamily::rotation_fde});
}

DDSequence teddy() {
  const Mat3 r = Eigen::Quaterniond::FromTwoVectors(Vec3(1, 1, 1).normalized(), Vec3::UnitZ()).toRotationMatrix();
  return make_sequence("TEDDY", {{r * Vec3::UnitX(), kPi}, {r * Vec3::UnitY(), kPi}},
                       {NoiseFamily::disorder, NoiseFamily::dipolar_rwa});
}

const ControlSpace& space4() {
  static const ControlSpace s = ControlSpace::ensemble(4);
  return s;
}

CMatrix unit_noise(std::uint64_t seed, bool rwa = true) {
  const NoiseSample s = sample_noise(4, 1.0, 1.0, rwa, seed);
  return s.h_err.matrix() / operator_norm(s.h_err);
}

// Reference first-order term: midpoint rule on a fine grid, toggling frame
// computed by direct exponentials.
CMatrix phi1_reference(const ControlSpace& sp, const PulseProfile& p, const CMatrix& h, int steps) {
  CMatrix u = CMatrix::Identity(sp.dim(), sp.dim());
  CMatrix acc = CMatrix::Zero(sp.dim(), sp.dim());
  for (const PulseSegment& s : p) {
    const CMatrix g = s.amplitude * sp.generator(s);
    const double dt = s.duration / steps;
    const CMatrix half = expm_hermitian_unchecked(g, 0.5 * dt);
    const CMatrix full = expm_hermitian_unchecked(g, dt);
    for (int k = 0; k < steps; ++k) {
      const CMatrix mid = half * u;
      acc += dt * mid.adjoint() * h * mid;
      u = full * u;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("segments") {
  const PulseSegment r = rotation_segment(Vec3(0, 0, 2), -kPi / 2, 1.0);
  CHECK(r.kind == SegmentKind::rotation);
  CHECK(r.angle() == doctest::Approx(-kPi / 2));
  CHECK(r.duration == doctest::Approx(kPi / 2));
  CHECK(r.axis.norm() == doctest::Approx(1.0));
  const PulseSegment s = squeezing_segment(0.3, 2.0);
  CHECK(s.duration == doctest::Approx(0.15));
  CHECK(profile_duration(PulseProfile{r, s, idle_segment(1.0)}) == doctest::Approx(kPi / 2 + 1.15));
  CHECK_THROWS_AS(rotation_segment(Vec3::UnitX(), 1.0, 0.0), Error);
}

TEST_CASE("balanced pair") {
  const ControlSpace& sp = space4();
  const CMatrix h = unit_noise(3, false) * 1e-3;
  for (const PulseProfile& target :
       {PulseProfile{rotation_segment(Vec3::UnitX(), kPi / 2, 1.0)}, PulseProfile{squeezing_segment(kPi / 2, 1.0)},
        PulseProfile{rotation_segment(Vec3::UnitY(), 0.7, 1.0), squeezing_segment(0.9, 1.0)}}) {
    const BalancedPair bp = balanced_pair(target);
    const Eigen::Index d = sp.dim();
    CHECK(max_abs(ideal_propagator(sp, bp.identity) - CMatrix::Identity(d, d)) < 1e-12);
    CHECK(max_abs(ideal_propagator(sp, bp.stretched) - ideal_propagator(sp, target)) < 1e-12);
    CHECK(profile_duration(bp.stretched) == doctest::Approx(2 * profile_duration(target)));
    CHECK(profile_duration(bp.identity) == doctest::Approx(2 * profile_duration(target)));
    // both carry the same first-order error
    const CMatrix a = magnus_phi1(sp, bp.stretched, h);
    const CMatrix b = magnus_phi1(sp, bp.identity, h);
    CHECK(max_abs(a - b) < 1e-8 * max_abs(a));
    for (const PulseSegment& s : bp.stretched) CHECK(s.role == SegmentRole::stretched);
  }
}

TEST_CASE("first-order term against a fine midpoint rule") {
  const ControlSpace& sp = space4();
  const CMatrix h = unit_noise(9, false);
  const PulseProfile p{rotation_segment(Vec3(1, 2, 3), 1.1, 1.0), squeezing_segment(-0.8, 1.0), idle_segment(0.2)};
  const CMatrix exact = magnus_phi1(sp, p, h);
  const CMatrix ref = phi1_reference(sp, p, h, 4000);
  CHECK(max_abs(exact - ref) < 1e-6);
  CHECK(is_hermitian(exact, 1e-12));
}

TEST_CASE("second-order term matches the exact propagator") {
  // exp(-i (Phi1 + Phi2)) reproduces the toggling-frame propagator to third order
  const ControlSpace& sp = space4();
  const PulseProfile p{rotation_segment(Vec3::UnitX(), kPi / 2, 1.0), squeezing_segment(0.6, 1.0)};
  const CMatrix v = ideal_propagator(sp, p);
  for (double x : {1e-2, 5e-3}) {
    const CMatrix h = unit_noise(17, false) * x;
    const CMatrix toggling = v.adjoint() * simulate_schedule(sp, p, h);
    const CMatrix phi = magnus_phi1(sp, p, h) + magnus_phi2(sp, p, h);
    const double err = max_abs(expm_hermitian_unchecked(phi, 1.0) - toggling);
    CHECK(err < 10 * std::pow(x * profile_duration(p), 3));
  }
}

TEST_CASE("magnus bounds hold on random instances") {
  const ControlSpace& sp = space4();
  const PulseProfile target{rotation_segment(Vec3::UnitX(), kPi / 2, 1.0)};
  const DCGSchedule dcg = assemble_dcg(tedd(), target, 1.0, sp);
  for (int k = 0; k < 50; ++k) {
    const double x = std::pow(10.0, -5 + 2.0 * k / 49);
    const CMatrix h = unit_noise(1000 + k, k % 2 == 0) * (x / dcg.meta.tau);
    for (const PulseProfile* p : {&target, &dcg.segments}) {
      const double tn = profile_duration(*p) * operator_norm(HermitianOperator(h));
      CHECK(operator_norm(HermitianOperator(magnus_phi1(sp, *p, h))) <= tn * (1 + 1e-12));
      CHECK(operator_norm(HermitianOperator(magnus_phi2(sp, *p, h))) <= magnus_bound(2, tn));
      CHECK(operator_norm(HermitianOperator(magnus_phi2(sp, *p, h))) <= magnus_bound_general(2, tn));
    }
  }
}

TEST_CASE("finite-duration error structure") {
  const ControlSpace& sp = space4();
  const NoiseSample ns = sample_noise(4, 1.0, 1.0, true, 5);
  const CMatrix h = ns.h_err.matrix();

  // squeezing commutes with RWA noise
  CHECK(max_abs(finite_duration_error(sp, PulseProfile{squeezing_segment(0.9, 1.0)}, h) - h) < 1e-12);

  for (const auto& [axis, angle] : {std::pair{Vec3(1, 2, 0.5), 1.3}, std::pair{Vec3(Vec3::UnitX()), kPi / 2}}) {
    const RotationErrorForm f = rotation_error_form(axis, angle);
    CHECK(std::abs((3 * f.big_m - Mat3::Identity()).trace()) < 1e-10);
    CHECK((f.big_m - f.big_m.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    const CMatrix he = finite_duration_error(sp, PulseProfile{rotation_segment(axis, angle, 1.0)}, h);
    CHECK(max_abs(he - rotation_error_hamiltonian(ns.instance, f)) < 1e-10);
  }

  const DDSequence seq = tedd();
  const PulseProfile rs{rotation_segment(Vec3::UnitY(), 0.7, 1.0), squeezing_segment(0.9, 1.0)};
  const PulseProfile sr{squeezing_segment(0.9, 1.0), rotation_segment(Vec3::UnitY(), 0.7, 1.0)};
  CHECK(correctable_residual(seq, sp, finite_duration_error(sp, rs, h)) < 1e-8);
  CHECK(correctable_residual(seq, sp, finite_duration_error(sp, sr, h)) > 1e-2);
}

TEST_CASE("DCG assembly") {
  const ControlSpace& sp = space4();
  const PulseProfile target{rotation_segment(Vec3::UnitX(), kPi / 2, 1.0)};
  const DCGSchedule g = assemble_dcg(tedd(), target, 1.0, sp);
  CHECK(g.meta.dd_pulses == 24);
  CHECK(g.meta.identity_gates == 11);
  CHECK(g.meta.stretched_gates == 1);
  CHECK(g.meta.alpha == doctest::Approx(56.0));
  CHECK(g.meta.beta == doctest::Approx(24.0));
  CHECK(g.meta.gamma == doctest::Approx(kPi / 2));
  const CMatrix v = ideal_propagator(sp, target);
  CHECK(distance(ideal_propagator(sp, g.segments), v) < 1e-10);

  // first-order cancellation of the full gate
  const CMatrix h = unit_noise(21) * 1e-4;
  CHECK(max_abs(magnus_phi1(sp, g.segments, h)) < 1e-10 * max_abs(magnus_phi1(sp, target, h)));

  // squeezing under the 8-pulse sequence
  const DCGSchedule s = assemble_dcg(teddy(), PulseProfile{squeezing_segment(kPi / 2, 1.0)}, 1.0, sp);
  CHECK(s.meta.dd_pulses == 8);
  CHECK(s.meta.identity_gates == 3);
  CHECK(s.meta.alpha == doctest::Approx(24.0));

  // rotation errors are outside what the 8-pulse sequence cancels
  CHECK_THROWS_AS(assemble_dcg(teddy(), target, 1.0, sp), Error);
  try {
    assemble_dcg(teddy(), target, 1.0, sp);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::leakage);
  }
  const PulseProfile sr{squeezing_segment(0.9, 1.0), rotation_segment(Vec3::UnitY(), 0.7, 1.0)};
  CHECK_THROWS_AS(assemble_dcg(tedd(), sr, 1.0, sp), Error);
}

TEST_CASE("first-order suppression slopes") {
  const ControlSpace& sp = space4();
  const PulseProfile target{rotation_segment(Vec3::UnitX(), kPi / 2, 1.0)};
  const DCGSchedule g = assemble_dcg(tedd(), target, 1.0, sp);
  const CMatrix v = ideal_propagator(sp, target);
  const CMatrix h = unit_noise(5);
  auto dist = [&](const PulseProfile& p, double x) { return distance(simulate_schedule(sp, p, h * (x / (kPi / 2))), v); };
  const double s_nodd = std::log10(dist(target, 1e-3) / dist(target, 1e-5)) / 2;
  const double s_dcg = std::log10(dist(g.segments, 1e-3) / dist(g.segments, 1e-5)) / 2;
  CHECK(s_nodd == doctest::Approx(1.0).epsilon(0.05));
  CHECK(s_dcg == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("control errors") {
  const ControlSpace& sp = space4();
  const PulseProfile target{squeezing_segment(kPi / 2, 1.0)};
  const BalancedPair bp = balanced_pair(target);
  PulseProfile id = bp.identity;
  const Eigen::Index d = sp.dim();
  const CMatrix zero = CMatrix::Zero(d, d);

  // type I scales every segment of the identity gate alike: still the identity
  const CMatrix u1 = simulate_schedule(sp, id, zero, ControlErrors::of_type(ControlErrorType::bp_type1, 1e-3));
  CHECK(max_abs(u1 - CMatrix::Identity(d, d)) < 1e-12);
  // type II over-rotates forward and under-rotates back: first order in epsilon
  const double e2 = distance(simulate_schedule(sp, id, zero, ControlErrors::of_type(ControlErrorType::bp_type2, 1e-3)),
                             CMatrix::Identity(d, d));
  const double e3 = distance(simulate_schedule(sp, id, zero, ControlErrors::of_type(ControlErrorType::bp_type2, 1e-4)),
                             CMatrix::Identity(d, d));
  CHECK(e2 > 1e-5);
  CHECK(e2 / e3 == doctest::Approx(10.0).epsilon(1e-3));

  // dd errors only touch dd segments
  const ControlErrors dd = ControlErrors::of_type(ControlErrorType::dd, 0.1);
  CHECK(dd.for_role(SegmentRole::dd) == 0.1);
  CHECK(dd.for_role(SegmentRole::nodd) == 0.0);
  CHECK(dd.for_role(SegmentRole::stretched) == 0.0);
  const ControlErrors t2 = ControlErrors::of_type(ControlErrorType::bp_type2, 0.1);
  CHECK(t2.for_role(SegmentRole::id_reverse) == -0.1);
  CHECK(t2.for_role(SegmentRole::id_forward) == 0.1);
  CHECK(control_error_from_string("bp_type2") == ControlErrorType::bp_type2);
  CHECK_THROWS_AS(control_error_from_string("bogus"), Error);
}

TEST_CASE("strategies") {
  const ControlSpace& sp = space4();
  const PulseProtocol ghz = ghz_pulse_protocol(4, 1.0);
  const DDSequence a = tedd(), b = teddy();
  const StrategySchedule nodd = build_strategy(ghz, Strategy::nodd, a, b, 1.0, sp);
  const StrategySchedule pp = build_strategy(ghz, Strategy::dcg_per_pulse, a, b, 1.0, sp);
  const StrategySchedule pc = build_strategy(ghz, Strategy::dcg_per_cycle, a, b, 1.0, sp);
  CHECK(nodd.duration == doctest::Approx(kPi));
  CHECK(pp.dcg_count == 2);
  CHECK(pc.dcg_count == 1);
  const CMatrix v = ideal_propagator(sp, nodd.segments);
  CHECK(distance(ideal_propagator(sp, pp.segments), v) < 1e-10);
  CHECK(distance(ideal_propagator(sp, pc.segments), v) < 1e-10);

  // GHZ from all-up, along the x-rotated basis: undoing the first pulse gives
  // equal weight on all-up and all-down
  const CVector psi =
      ideal_propagator(sp, PulseProfile{rotation_segment(Vec3::UnitX(), -kPi / 2, 1.0)}) * v * ghz.initial;
  CHECK(std::norm(psi(0)) == doctest::Approx(0.5));
  CHECK(std::norm(psi(15)) == doctest::Approx(0.5));

  // lambda = sqrt(2 / (gamma alpha^2)) for the per-pulse gate is of order 1e-1 or below
  const double alpha = pp.duration / nodd.duration;
  const double lambda = regime_thresholds(alpha, 1.0, nodd.duration, 1e-3).lambda;
  CHECK(std::abs(std::log10(lambda) + 1.0) < 1.0);

  CHECK(strategy_from_string("dcg_per_cycle") == Strategy::dcg_per_cycle);
  CHECK_THROWS_AS(strategy_from_string("x"), Error);
}

TEST_CASE("ac protocol pulses") {
  const std::vector<ControlCycle> cycles{{0.0, kPi / 2}, {0.3, 0.0}};
  const PulseProtocol p = ac_pulse_protocol(4, cycles, 1.0);
  REQUIRE(p.cycles.size() == 2u);
  CHECK(p.cycles[0].size() == 1u);
  CHECK(p.cycles[1].size() == 1u);
  CHECK(p.initial.norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(ac_pulse_protocol(4, std::vector<ControlCycle>{{0.0, 0.0}}, 1.0), Error);
}
