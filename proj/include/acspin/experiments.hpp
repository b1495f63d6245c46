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
#include <utility>
#include <vector>

#include "acspin/csv.hpp"
#include "acspin/dcg.hpp"
#include "acspin/protocol.hpp"

namespace acspin {

/// log10 y = slope * log10 x + intercept, least squares.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

/// "theta/eta theta/eta ..." for provenance headers.
std::string cycles_to_string(std::span<const ControlCycle> cycles);

/// `points` values spaced evenly in log10 between lo and hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

// ---- power law ---------------------------------------------------------

struct PowerlawRow {
  int two_j = 0;
  double eta2_seed = 0.0;
  double eta3_seed = 0.0;
  double seed_deviation = 0.0;  // 1 - A_2 of the unrefined seeds
  double eta2 = 0.0;
  double eta3 = 0.0;
  double deviation = 0.0;  // 1 - A_2 after refinement
};

/// Integer j in [j_min, j_max], roughly log-spaced, no duplicates.
std::vector<int> powerlaw_j_values(int j_min, int j_max, int points);
PowerlawRow powerlaw_row(int j);
std::vector<PowerlawRow> powerlaw_sweep(std::span<const int> j_values, int workers = 0);
CsvTable powerlaw_table(std::span<const PowerlawRow> rows);

// ---- multipole trace ---------------------------------------------------

struct TraceRow {
  int step = 0;
  std::string label;  // "initial", "R<k>" after rotation k, "S<k>" after squeezing k
  int L = 0;
  int M = 0;
  double weight = 0.0;  // |rho_LM|^2
};

std::vector<TraceRow> multipole_trace(const ProtocolRecord& record);
CsvTable trace_table(const ProtocolRecord& record, std::span<const TraceRow> rows);

// ---- noise and control-error grids -------------------------------------

struct SequencePair {
  DDSequence rotation;   // protects rotations, and whole cycles
  DDSequence squeezing;  // protects squeezing pulses
};

/// Unit-norm disorder and dipolar parts of one random instance, so that any
/// (delta, Delta) point reuses the same couplings.
struct NoiseShape {
  CMatrix disorder;
  CMatrix dipolar;
  CMatrix at(double delta, double dipolar_norm) const { return delta * disorder + dipolar_norm * dipolar; }
};
std::vector<NoiseShape> noise_shapes(int n, int count, bool rwa, std::uint64_t seed);

enum class Regime { disorder_dominated, dipolar_dominated };
std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

/// (delta, Delta) with the subdominant term `ratio` times the dominant one and
/// |H_err| = noise.
std::pair<double, double> scale_to_norm(const NoiseShape& shape, Regime regime, double ratio, double noise);

/// Pulse schedules of one protocol under each strategy, built once.
class StrategyBench {
 public:
  StrategyBench(PulseProtocol protocol, SequencePair sequences, double chi, std::vector<Strategy> strategies);

  struct Outcome {
    double distance = 0.0;
    double infidelity = 0.0;
  };
  Outcome evaluate(Strategy s, const CMatrix& h_err, const ControlErrors& errors = {}) const;
  /// Mean over shapes at the given (delta, Delta).
  Outcome mean(Strategy s, std::span<const NoiseShape> shapes, double delta, double dipolar,
               const ControlErrors& errors = {}) const;

  const PulseProtocol& protocol() const { return protocol_; }
  const SequencePair& sequences() const { return seqs_; }
  const std::vector<Strategy>& strategies() const { return strategies_; }
  const StrategySchedule& schedule(Strategy s) const;
  const ControlSpace& space() const { return space_; }
  double chi() const { return chi_; }

  /// Extra provenance lines carried into every CSV built from this bench.
  void annotate(const std::string& key, const std::string& value) { notes_.emplace_back(key, value); }
  const std::vector<std::pair<std::string, std::string>>& annotations() const { return notes_; }

 private:
  PulseProtocol protocol_;
  SequencePair seqs_;
  double chi_;
  std::vector<Strategy> strategies_;
  ControlSpace space_;
  std::vector<StrategySchedule> schedules_;
  CMatrix target_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

struct NoiseGridSpec {
  std::vector<double> disorder;  // delta / chi
  std::vector<double> dipolar;   // Delta / chi
  int instances = 20;
  bool rwa = true;
  std::uint64_t seed = 1;
  int workers = 0;
};

struct GridRow {
  double disorder = 0.0;
  double dipolar = 0.0;
  Strategy strategy = Strategy::nodd;
  double distance = 0.0;    // mean over instances
  double infidelity = 0.0;  // mean over instances
};

/// Sorted by (disorder, dipolar, strategy); identical for any worker count.
std::vector<GridRow> run_noise_grid(const StrategyBench& bench, const NoiseGridSpec& spec);

struct Crossover {
  bool found = false;
  double log10_noise = 0.0;       // dominant term / chi where the strategy meets NoDD
  double nodd_infidelity = 0.0;  // mean NoDD infidelity there
};

/// Bisection in log10 of the dominant term on [log_lo, log_hi]. Requires the
/// strategy to beat NoDD at log_lo and lose at log_hi; found = false otherwise.
Crossover find_crossover(const StrategyBench& bench, Strategy s, std::span<const NoiseShape> shapes, Regime regime,
                         double ratio = 0.1, double log_lo = -4.0, double log_hi = 0.0, double tol = 1e-3);

struct ControlGridSpec {
  ControlErrorType type = ControlErrorType::dd;
  Regime regime = Regime::disorder_dominated;
  double ratio = 0.1;
  std::vector<double> noise;    // |H_err| / chi
  std::vector<double> epsilon;  // flip-angle error
  int instances = 5;
  bool rwa = true;
  std::uint64_t seed = 1;
  int workers = 0;
};

struct ControlRow {
  double noise = 0.0;
  double epsilon = 0.0;
  Strategy strategy = Strategy::nodd;
  double distance = 0.0;
  double infidelity = 0.0;
};

/// Sorted by (noise, epsilon, strategy).
std::vector<ControlRow> run_control_grid(const StrategyBench& bench, const ControlGridSpec& spec);

struct Boundary {
  double noise = 0.0;
  bool found = false;
  double log10_epsilon = 0.0;  // largest epsilon at which the strategy still beats NoDD
};

/// Bisection in log10 epsilon on [log_lo, log_hi] at fixed |H_err| / chi.
/// Keep log_hi well below 0: at epsilon = 1 a 2pi/3 pulse becomes a 4pi/3
/// pulse, which is again a group element and decouples.
Boundary advantage_boundary(const StrategyBench& bench, Strategy s, std::span<const NoiseShape> shapes,
                            ControlErrorType type, Regime regime, double ratio, double noise, double log_lo = -9.0,
                            double log_hi = -1.0, double tol = 1e-3);

CsvTable noise_grid_table(const StrategyBench& bench, const NoiseGridSpec& spec, std::span<const GridRow> rows);
CsvTable control_grid_table(const StrategyBench& bench, const ControlGridSpec& spec, std::span<const ControlRow> rows);

}  // namespace acspin
