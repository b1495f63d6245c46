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

#include "acspin/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include <json.hpp>

#include "acspin/error.hpp"
#include "acspin/multipole.hpp"
#include "acspin/nelder_mead.hpp"
#include "acspin/parallel.hpp"

namespace acspin {

namespace {

using std::numbers::pi;

void run_cycles(SpinQuantumNumber j, std::span<const ControlCycle> cycles, CVector& psi) {
  for (const ControlCycle& c : cycles) {
    if (c.theta != 0.0) apply_rotation_y(j, c.theta, psi);
    if (c.eta != 0.0) apply_squeezing_z(j, c.eta, psi);
  }
}

// x = (theta_2..theta_n, eta_1..eta_n).
std::vector<ControlCycle> unpack(const RVector& x, int n) {
  std::vector<ControlCycle> cycles(n);
  for (int i = 1; i < n; ++i) cycles[i].theta = x(i - 1);
  for (int i = 0; i < n; ++i) cycles[i].eta = x(n - 1 + i);
  return cycles;
}

RVector pack(std::span<const ControlCycle> cycles) {
  const int n = static_cast<int>(cycles.size());
  RVector x(2 * n - 1);
  for (int i = 1; i < n; ++i) x(i - 1) = cycles[i].theta;
  for (int i = 0; i < n; ++i) x(n - 1 + i) = cycles[i].eta;
  return x;
}

struct Objective {
  SpinQuantumNumber j;
  int n;
  AnticoherenceEvaluator eval;
  CVector psi0;

  double operator()(const RVector& x) const {
    CVector psi = psi0;
    run_cycles(j, unpack(x, n), psi);
    return eval.deviation_squared(psi);
  }
};

NelderMeadOptions nm_options(long budget) {
  NelderMeadOptions o;
  o.initial_step = 0.3;
  o.x_tol = 1e-12;
  // The objective is (1 - A_t)^2; the spread test applies to 1 - A_t itself.
  o.f_tol = 1e-14;
  o.spread_scale = [](double v) { return std::sqrt(std::max(0.0, v)); };
  o.max_evaluations = budget;
  return o;
}

struct StartResult {
  RVector x;
  double f = 0.0;
  long evaluations = 0;
};

// Nelder-Mead followed by restarts from the best point until a restart no
// longer improves it; restarts rebuild a fresh simplex and escape collapse.
StartResult minimize_from(const Objective& obj, const RVector& x0, long budget) {
  NelderMeadOptions o = nm_options(budget);
  NelderMeadResult r = nelder_mead(std::cref(obj), x0, o);
  StartResult out{r.x, r.f, r.evaluations};
  for (int polish = 0; polish < 4 && out.evaluations < budget; ++polish) {
    o.max_evaluations = std::max<long>(budget - out.evaluations, 2 * x0.size() + 2);
    o.initial_step = polish == 0 ? 0.05 : 1e-3;
    NelderMeadResult again = nelder_mead(std::cref(obj), out.x, o);
    out.evaluations += again.evaluations;
    if (!(again.f < out.f)) break;
    out.x = again.x;
    out.f = again.f;
  }
  return out;
}

RVector random_start(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-pi, pi);
  std::uniform_real_distribution<double> squeeze(-pi / 2, pi / 2);
  RVector x(2 * n - 1);
  for (int i = 0; i < n - 1; ++i) x(i) = angle(rng);
  for (int i = 0; i < n; ++i) x(n - 1 + i) = squeeze(rng);
  return x;
}

OptimizationResult finish(SpinQuantumNumber j, int t, std::vector<ControlCycle> cycles, long evaluations, int starts,
                          double target) {
  SpinState state = apply_protocol(j, cycles);
  const double dev = ac_deviation(state, t);
  return OptimizationResult{std::move(cycles), std::move(state), dev, evaluations, starts, dev <= target};
}

void check_protocol_args(SpinQuantumNumber j, int t, int n_cycles) {
  require(t >= 1 && t <= j.two_j(), ErrorCode::invalid_argument, "protocol: need 1 <= t <= 2j");
  require(n_cycles >= 1, ErrorCode::invalid_argument, "protocol: need at least one cycle");
}

}  // namespace

SpinState apply_protocol(SpinQuantumNumber j, std::span<const ControlCycle> cycles) {
  require(cycles.empty() || cycles.front().theta == 0.0, ErrorCode::invalid_argument,
          "apply_protocol: the first rotation angle must be zero");
  for (const ControlCycle& c : cycles)
    require(std::isfinite(c.theta) && std::isfinite(c.eta), ErrorCode::invalid_argument,
            "apply_protocol: non-finite control parameter");
  CVector psi = coherent_state_y(j).amplitudes();
  run_cycles(j, cycles, psi);
  return SpinState::normalized(j, std::move(psi));
}

double state_fidelity_up_to_phase(const SpinState& psi, const SpinState& phi) {
  require(psi.spin() == phi.spin(), ErrorCode::dimension_mismatch, "fidelity: states have different spin");
  return std::min(1.0, std::norm(phi.amplitudes().dot(psi.amplitudes())));
}

CostAccounting cost_accounting(std::span<const ControlCycle> cycles) {
  CostAccounting c;
  for (const ControlCycle& cy : cycles) {
    c.total_rotation += std::abs(cy.theta);
    c.total_squeezing += std::abs(cy.eta);
  }
  return c;
}

std::vector<ControlCycle> wrap_rotations(std::span<const ControlCycle> cycles) {
  std::vector<ControlCycle> out(cycles.begin(), cycles.end());
  for (ControlCycle& c : out) {
    double th = std::remainder(c.theta, pi);  // [-pi/2, pi/2]
    if (th == -pi / 2) th = pi / 2;
    c.theta = th;
  }
  return out;
}

std::vector<double> equivalent_rotation_costs(std::span<const ControlCycle> cycles) {
  std::vector<double> sums{0.0};
  for (const ControlCycle& c : cycles) {
    const double a = std::abs(std::remainder(c.theta, pi));
    std::vector<double> next;
    for (double s : sums) {
      next.push_back(s + a);
      if (a > 0.0) next.push_back(s + (pi - a));
    }
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

OptimizationResult optimize_protocol(SpinQuantumNumber j, int t, int n_cycles, std::uint64_t seed,
                                     const OptimizeOptions& opts) {
  check_protocol_args(j, t, n_cycles);
  require(opts.max_starts >= 1 && opts.budget >= 2L * n_cycles + 1, ErrorCode::invalid_argument,
          "optimize_protocol: budget too small");
  const Objective obj{j, n_cycles, AnticoherenceEvaluator(j, t), coherent_state_y(j).amplitudes()};

  constexpr int kBatch = 8;
  std::vector<StartResult> results;
  long evaluations = 0;
  for (int first = 0; first < opts.max_starts; first += kBatch) {
    const int count = std::min(kBatch, opts.max_starts - first);
    std::vector<StartResult> batch(count);
    parallel_for(
        count,
        [&](std::size_t k) {
          const RVector x0 = random_start(n_cycles, derive_seed(seed, first + k));
          batch[k] = minimize_from(obj, x0, opts.budget);
        },
        opts.workers);
    for (auto& r : batch) {
      evaluations += r.evaluations;
      results.push_back(std::move(r));
    }
    if (opts.stop_early && opts.selection == Selection::best_deviation) {
      const bool hit = std::any_of(results.begin(), results.end(), [&](const StartResult& r) {
        return std::sqrt(r.f) <= opts.target_deviation;
      });
      if (hit) break;
    }
  }

  // Ties resolve to the earliest start, which keeps the choice deterministic.
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k)
    if (results[k].f < results[best].f) best = k;
  if (opts.selection == Selection::min_squeezing) {
    const double fq = opts.converged_deviation * opts.converged_deviation;
    std::ptrdiff_t pick = -1;
    CostAccounting pick_cost;
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k].f > fq) continue;
      const auto cycles = wrap_rotations(unpack(results[k].x, n_cycles));
      const CostAccounting c = cost_accounting(cycles);
      const bool better = pick < 0 || c.total_squeezing < pick_cost.total_squeezing - 1e-9 ||
                          (std::abs(c.total_squeezing - pick_cost.total_squeezing) <= 1e-9 &&
                           c.total_rotation < pick_cost.total_rotation - 1e-9);
      if (better) {
        pick = static_cast<std::ptrdiff_t>(k);
        pick_cost = c;
      }
    }
    if (pick >= 0)
      return finish(j, t, wrap_rotations(unpack(results[pick].x, n_cycles)), evaluations,
                    static_cast<int>(results.size()), opts.target_deviation);
  }
  return finish(j, t, unpack(results[best].x, n_cycles), evaluations, static_cast<int>(results.size()),
                opts.target_deviation);
}

OptimizationResult refine_protocol(SpinQuantumNumber j, int t, std::span<const ControlCycle> start, long budget) {
  const int n = static_cast<int>(start.size());
  check_protocol_args(j, t, n);
  require(start.front().theta == 0.0, ErrorCode::invalid_argument, "refine_protocol: first rotation must be zero");
  const Objective obj{j, n, AnticoherenceEvaluator(j, t), coherent_state_y(j).amplitudes()};
  NelderMeadOptions o = nm_options(budget);
  o.initial_step = 1e-2;
  const NelderMeadResult r = nelder_mead(std::cref(obj), pack(start), o);
  return finish(j, t, unpack(r.x, n), r.evaluations, 1, 1e-7);
}

std::pair<double, double> powerlaw_squeezing(double j) {
  require(j > 0.0, ErrorCode::invalid_argument, "powerlaw_squeezing: j must be positive");
  return {3.0 / (4.0 * std::sqrt(2.0 * j)), 5.0 / (4.0 * j)};
}

std::vector<ControlCycle> analytic_params(SpinQuantumNumber j, int t, bool refine) {
  if (t == 1) return {{0.0, pi / 2}};
  require(t == 2 || (t == 3 && j.two_j() == 6), ErrorCode::unsupported,
          "analytic_params: closed forms exist for t = 1, t = 2 (integer j) and t = 3 (j = 3); use optimize_protocol");
  require(j.is_integer() && j.two_j() >= 4, ErrorCode::unsupported,
          "analytic_params: t = 2 closed form needs integer j >= 2; use optimize_protocol");
  const double jv = j.value();
  const double arccot_sqrt2 = std::atan(1.0 / std::sqrt(2.0));
  double eta2 = 0.0;
  double eta3 = 0.0;
  if (j.two_j() == 4) {
    eta2 = -arccot_sqrt2 / 2;
    eta3 = arccot_sqrt2 / 4;
  } else if (j.two_j() == 6) {
    eta2 = -arccot_sqrt2 / 2;
    eta3 = (pi - std::atan(2.0 * std::sqrt(2.0))) / 8;
  } else {
    // The power law is used with both signs positive. The exact j = 2, 3
    // values sit on a different branch (negative eta_2) that does not
    // continue smoothly to large j.
    std::tie(eta2, eta3) = powerlaw_squeezing(jv);
  }
  std::vector<ControlCycle> cycles{{0.0, pi / 2}, {-pi / (4 * jv), eta2}, {pi / 2, eta3}};
  if (refine && j.two_j() > 6) {
    // Only eta_2 and eta_3 move; the rotation ansatz stays fixed.
    const Objective base{j, 3, AnticoherenceEvaluator(j, 2), coherent_state_y(j).amplitudes()};
    auto f = [&](const RVector& x) {
      const std::vector<ControlCycle> c{{0.0, pi / 2}, {-pi / (4 * jv), x(0)}, {pi / 2, x(1)}};
      CVector psi = base.psi0;
      run_cycles(j, c, psi);
      return base.eval.deviation_squared(psi);
    };
    NelderMeadOptions o = nm_options(20000);
    o.initial_step = 0.1 * std::abs(eta3);
    RVector x0(2);
    x0 << eta2, eta3;
    const NelderMeadResult r = nelder_mead(f, x0, o);
    if (r.f < f(x0)) {
      cycles[1].eta = r.x(0);
      cycles[2].eta = r.x(1);
    }
  }
  return cycles;
}

ProtocolRecord make_record(SpinQuantumNumber j, int t, std::vector<ControlCycle> cycles, std::string source,
                           double target_deviation) {
  ProtocolRecord r;
  r.j = j;
  r.t = t;
  r.cycles = std::move(cycles);
  const SpinState psi = apply_protocol(j, r.cycles);
  for (int s = 1; s <= t; ++s) r.deviations.push_back(ac_deviation(psi, s));
  r.cost = cost_accounting(r.cycles);
  r.converged = r.deviations.back() <= target_deviation;
  r.source = std::move(source);
  return r;
}

std::string record_to_json(const ProtocolRecord& r) {
  nlohmann::ordered_json doc;
  doc["schema"] = "acspin.protocol/1";
  doc["two_j"] = r.j.two_j();
  doc["j"] = r.j.value();
  doc["t"] = r.t;
  doc["n_cycles"] = r.cycles.size();
  doc["cycles"] = nlohmann::ordered_json::array();
  for (const ControlCycle& c : r.cycles) doc["cycles"].push_back({{"theta", c.theta}, {"eta", c.eta}});
  doc["deviation"] = r.deviations;
  doc["cost"] = {{"total_rotation", r.cost.total_rotation}, {"total_squeezing", r.cost.total_squeezing}};
  doc["converged"] = r.converged;
  doc["source"] = r.source;
  return doc.dump(2) + "\n";
}

ProtocolRecord record_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    ProtocolRecord r;
    r.j = SpinQuantumNumber(doc.at("two_j").get<int>());
    r.t = doc.at("t").get<int>();
    for (const auto& c : doc.at("cycles")) r.cycles.push_back({c.at("theta").get<double>(), c.at("eta").get<double>()});
    if (doc.contains("deviation")) r.deviations = doc["deviation"].get<std::vector<double>>();
    r.cost = cost_accounting(r.cycles);
    r.converged = doc.value("converged", false);
    r.source = doc.value("source", std::string("file"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("protocol record: ") + e.what());
  }
}

}  // namespace acspin
