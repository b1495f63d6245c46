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

#include "acspin/angmom.hpp"

namespace acspin {

/// One protocol cycle: R_y(theta) followed by S_z(eta).
struct ControlCycle {
  double theta = 0.0;
  double eta = 0.0;
};

/// prod_i S_z(eta_i) R_y(theta_i) applied to the +y coherent state.
/// The first rotation must be zero; an empty list returns the initial state.
SpinState apply_protocol(SpinQuantumNumber j, std::span<const ControlCycle> cycles);

double state_fidelity_up_to_phase(const SpinState& psi, const SpinState& phi);

struct CostAccounting {
  double total_rotation = 0.0;   // sum |theta_i|
  double total_squeezing = 0.0;  // sum |eta_i|
};
CostAccounting cost_accounting(std::span<const ControlCycle> cycles);

// R_y(pi) commutes with R_y and with J_z^2 and only rephases the initial state,
// so theta_k -> theta_k + pi moves the final state by a global rotation and
// leaves every A_t unchanged.

/// Each theta mapped into (-pi/2, pi/2], the least rotation for the same A_t.
std::vector<ControlCycle> wrap_rotations(std::span<const ControlCycle> cycles);
/// Total rotation of every equivalent parameter set with all |theta| <= pi, sorted.
std::vector<double> equivalent_rotation_costs(std::span<const ControlCycle> cycles);

enum class Selection {
  /// Lowest deviation over all starts.
  best_deviation,
  /// Among starts below converged_deviation, least total squeezing, then least
  /// total rotation after wrap_rotations, which is also applied to the result.
  /// Falls back to best_deviation when none qualifies.
  min_squeezing,
};

struct OptimizeOptions {
  /// Objective evaluations allowed per start.
  long budget = 20000;
  int max_starts = 32;
  /// Result is flagged converged when its deviation is at or below this.
  double target_deviation = 1e-7;
  /// Qualification threshold for Selection::min_squeezing.
  double converged_deviation = 1e-12;
  Selection selection = Selection::best_deviation;
  /// Stop launching new batches of starts once a start reaches
  /// target_deviation. Ignored by Selection::min_squeezing.
  bool stop_early = true;
  /// 0 selects default_workers().
  int workers = 0;
};

struct OptimizationResult {
  std::vector<ControlCycle> cycles;
  SpinState final_state;
  double deviation = 1.0;
  long evaluations = 0;
  int restarts_used = 0;
  bool converged = false;
};

/// Multi-start Nelder-Mead over (theta_2..theta_nC, eta_1..eta_nC) minimizing
/// 1 - A_t. Starts run in fixed batches with seeds derived from `seed`, so the
/// result does not depend on the worker count.
OptimizationResult optimize_protocol(SpinQuantumNumber j, int t, int n_cycles, std::uint64_t seed,
                                     const OptimizeOptions& opts = {});

/// Local refinement of a full parameter set (all entries but theta_1 free).
OptimizationResult refine_protocol(SpinQuantumNumber j, int t, std::span<const ControlCycle> start,
                                   long budget = 20000);

/// Squeezing values that seed the large-j t = 2 protocol:
/// |eta_2| = 3/(4 sqrt(2j)), eta_3 = 5/(4j).
std::pair<double, double> powerlaw_squeezing(double j);

/// Closed-form protocols: t = 1 for any j; t = 2 for integer j (exact for
/// j = 2, 3, power-law seeded and optionally refined for j > 3). j = 3 also
/// gives the order-3 octahedron state.
std::vector<ControlCycle> analytic_params(SpinQuantumNumber j, int t, bool refine = true);

/// Parameter-file record shared by the CLI and the trace tools.
struct ProtocolRecord {
  SpinQuantumNumber j{2};
  int t = 1;
  std::vector<ControlCycle> cycles;
  std::vector<double> deviations;  // 1 - A_s for s = 1..t
  CostAccounting cost;
  bool converged = false;
  std::string source;  // "analytic" or "optimized"
};

ProtocolRecord make_record(SpinQuantumNumber j, int t, std::vector<ControlCycle> cycles, std::string source,
                           double target_deviation);
std::string record_to_json(const ProtocolRecord& r);
ProtocolRecord record_from_json(const std::string& text);

}  // namespace acspin
