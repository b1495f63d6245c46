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


#include "acspin/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "acspin/ensemble.hpp"
#include "acspin/error.hpp"
#include "acspin/metrics.hpp"
#include "acspin/multipole.hpp"
#include "acspin/parallel.hpp"

namespace acspin {

namespace {

std::string join(std::span<const double> v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + format_number(v[k]);
  return out;
}

std::string cycles_string(std::span<const ControlCycle> cycles) {
  std::string out;
  for (std::size_t k = 0; k < cycles.size(); ++k)
    out += (k ? " " : "") + format_number(cycles[k].theta) + "/" + format_number(cycles[k].eta);
  return out;
}

std::pair<double, double> split_dominant(Regime regime, double ratio, double dominant) {
  return regime == Regime::disorder_dominated ? std::pair{dominant, ratio * dominant}
                                              : std::pair{ratio * dominant, dominant};
}

int strategy_rank(Strategy s) { return static_cast<int>(s); }

void describe_bench(CsvTable& t, const StrategyBench& b) {
  t.set("protocol", b.protocol().name);
  t.set("spins", std::to_string(b.space().n));
  t.set("chi", format_number(b.chi()));
  for (const auto& [k, v] : b.annotations()) t.set(k, v);
  std::string strategies;
  for (Strategy s : b.strategies()) strategies += (strategies.empty() ? "" : " ") + to_string(s);
  t.set("strategies", strategies);
  for (const auto& [key, seq] : {std::pair{"rotation_sequence", &b.sequences().rotation},
                                 std::pair{"squeezing_sequence", &b.sequences().squeezing}}) {
    t.set(key, seq->name);
    // sequences built in memory are hashed through their canonical JSON
    std::string hash = seq->source_hash;
    if (hash.empty()) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(sequence_to_json(*seq))));
      hash = buf;
    }
    t.set(std::string(key) + "_hash", hash);
  }
}

}  // namespace

std::string cycles_to_string(std::span<const ControlCycle> cycles) { return cycles_string(cycles); }

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, ErrorCode::invalid_argument, "fit_loglog: need >= 2 paired points");
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    require(x[k] > 0.0 && y[k] > 0.0, ErrorCode::invalid_argument, "fit_loglog: values must be positive");
    const double lx = std::log10(x[k]), ly = std::log10(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  require(den > 0.0, ErrorCode::invalid_argument, "fit_loglog: x values must not all coincide");
  LineFit f;
  f.slope = (n * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / n;
  return f;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  require(lo > 0.0 && hi >= lo && points >= 1, ErrorCode::invalid_argument, "log_grid: need 0 < lo <= hi, points >= 1");
  if (points == 1) return {lo};
  std::vector<double> out(points);
  const double a = std::log10(lo), b = std::log10(hi);
  for (int k = 0; k < points; ++k) out[k] = std::pow(10.0, a + (b - a) * k / (points - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

// ---- power law ---------------------------------------------------------

std::vector<int> powerlaw_j_values(int j_min, int j_max, int points) {
  require(j_min >= 4 && j_max >= j_min && points >= 1, ErrorCode::invalid_argument,
          "powerlaw: need 4 <= j_min <= j_max and points >= 1");
  std::vector<int> out;
  for (double v : log_grid(j_min, j_max, points)) out.push_back(static_cast<int>(std::lround(v)));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PowerlawRow powerlaw_row(int j) {
  const SpinQuantumNumber s(2 * j);
  PowerlawRow r;
  r.two_j = 2 * j;
  const std::vector<ControlCycle> seed = analytic_params(s, 2, false);
  r.eta2_seed = seed[1].eta;
  r.eta3_seed = seed[2].eta;
  r.seed_deviation = ac_deviation(apply_protocol(s, seed), 2);
  const std::vector<ControlCycle> refined = analytic_params(s, 2, true);
  r.eta2 = refined[1].eta;
  r.eta3 = refined[2].eta;
  r.deviation = ac_deviation(apply_protocol(s, refined), 2);
  return r;
}

std::vector<PowerlawRow> powerlaw_sweep(std::span<const int> j_values, int workers) {
  std::vector<PowerlawRow> rows(j_values.size());
  parallel_for(j_values.size(), [&](std::size_t k) { rows[k] = powerlaw_row(j_values[k]); }, workers);
  return rows;
}

CsvTable powerlaw_table(std::span<const PowerlawRow> rows) {
  CsvTable t;
  t.schema = "acspin.powerlaw/1";
  t.set("order", "2");
  t.set("ansatz", "theta = (0, -pi/(4j), pi/2), eta_1 = pi/2");
  t.columns = {"j", "eta2_seed", "eta3_seed", "seed_deviation", "eta2", "eta3", "deviation"};
  std::vector<double> j, e2, e3;
  for (const PowerlawRow& r : rows) {
    t.add_row({format_number(0.5 * r.two_j), format_number(r.eta2_seed), format_number(r.eta3_seed),
               format_number(r.seed_deviation), format_number(r.eta2), format_number(r.eta3),
               format_number(r.deviation)});
    j.push_back(0.5 * r.two_j);
    e2.push_back(std::abs(r.eta2));
    e3.push_back(std::abs(r.eta3));
  }
  if (rows.size() >= 2) {
    const LineFit f2 = fit_loglog(j, e2), f3 = fit_loglog(j, e3);
    t.set("eta2_slope", format_number(f2.slope));
    t.set("eta2_prefactor", format_number(std::pow(10.0, f2.intercept)));
    t.set("eta3_slope", format_number(f3.slope));
    t.set("eta3_prefactor", format_number(std::pow(10.0, f3.intercept)));
  }
  return t;
}

// ---- multipole trace ---------------------------------------------------

std::vector<TraceRow> multipole_trace(const ProtocolRecord& record) {
  const SpinQuantumNumber j = record.j;
  const int max_L = j.two_j();
  CVector psi = coherent_state_y(j).amplitudes();
  std::vector<TraceRow> rows;
  int step = 0;
  auto snapshot = [&](const std::string& label) {
    const MultipoleDecomposition d = decompose(SpinState::normalized(j, psi), max_L);
    for (int L = 0; L <= max_L; ++L)
      for (int M = -L; M <= L; ++M) rows.push_back({step, label, L, M, std::norm(d(L, M))});
    ++step;
  };
  snapshot("initial");
  for (std::size_t k = 0; k < record.cycles.size(); ++k) {
    const ControlCycle& c = record.cycles[k];
    if (c.theta != 0.0) {
      apply_rotation_y(j, c.theta, psi);
      snapshot("R" + std::to_string(k + 1));
    }
    if (c.eta != 0.0) {
      apply_squeezing_z(j, c.eta, psi);
      snapshot("S" + std::to_string(k + 1));
    }
  }
  return rows;
}

CsvTable trace_table(const ProtocolRecord& record, std::span<const TraceRow> rows) {
  CsvTable t;
  t.schema = "acspin.trace/1";
  t.set("j", format_number(record.j.value()));
  t.set("t", std::to_string(record.t));
  t.set("source", record.source);
  t.set("cycles", cycles_string(record.cycles));
  t.columns = {"step", "label", "L", "M", "weight"};
  for (const TraceRow& r : rows)
    t.add_row({std::to_string(r.step), r.label, std::to_string(r.L), std::to_string(r.M), format_number(r.weight)});
  return t;
}

// ---- grids -------------------------------------------------------------

std::vector<NoiseShape> noise_shapes(int n, int count, bool rwa, std::uint64_t seed) {
  require(count >= 1, ErrorCode::invalid_argument, "noise_shapes: need at least one instance");
  std::vector<NoiseShape> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const NoiseSample s = sample_noise(n, 1.0, 1.0, rwa, derive_seed(seed, static_cast<std::uint64_t>(k)));
    out.push_back({s.h_dis.matrix(), s.h_dd.matrix()});
  }
  return out;
}

std::string to_string(Regime r) {
  return r == Regime::disorder_dominated ? "disorder_dominated" : "dipolar_dominated";
}

Regime regime_from_string(const std::string& s) {
  if (s == "disorder_dominated" || s == "disorder") return Regime::disorder_dominated;
  if (s == "dipolar_dominated" || s == "dipolar") return Regime::dipolar_dominated;
  fail(ErrorCode::invalid_argument, "unknown regime: " + s);
}

std::pair<double, double> scale_to_norm(const NoiseShape& shape, Regime regime, double ratio, double noise) {
  require(ratio >= 0.0 && noise >= 0.0, ErrorCode::invalid_argument, "scale_to_norm: ratio and norm must be >= 0");
  const auto [d, D] = split_dominant(regime, ratio, 1.0);
  const double norm = operator_norm(shape.at(d, D));
  require(norm > 0.0, ErrorCode::invalid_argument, "scale_to_norm: zero noise shape");
  return {d * noise / norm, D * noise / norm};
}

StrategyBench::StrategyBench(PulseProtocol protocol, SequencePair sequences, double chi, std::vector<Strategy> strategies)
    : protocol_(std::move(protocol)),
      seqs_(std::move(sequences)),
      chi_(chi),
      strategies_(std::move(strategies)) {
  require(!strategies_.empty(), ErrorCode::invalid_argument, "StrategyBench: no strategies");
  require(chi_ > 0.0, ErrorCode::invalid_argument, "StrategyBench: chi must be positive");
  const int dim = static_cast<int>(protocol_.initial.size());
  int n = 0;
  while ((1 << n) < dim) ++n;
  require((1 << n) == dim, ErrorCode::dimension_mismatch, "StrategyBench: initial state is not an n-spin state");
  space_ = ControlSpace::ensemble(n);
  std::sort(strategies_.begin(), strategies_.end(),
            [](Strategy a, Strategy b) { return strategy_rank(a) < strategy_rank(b); });
  strategies_.erase(std::unique(strategies_.begin(), strategies_.end()), strategies_.end());
  // NoDD is the reference for every comparison, so it is always built.
  for (Strategy s : {Strategy::nodd, Strategy::dcg_per_pulse, Strategy::dcg_per_cycle})
    if (s == Strategy::nodd || std::find(strategies_.begin(), strategies_.end(), s) != strategies_.end())
      schedules_.push_back(build_strategy(protocol_, s, seqs_.rotation, seqs_.squeezing, chi_, space_));
  target_ = ideal_propagator(space_, schedules_.front().segments);
}

const StrategySchedule& StrategyBench::schedule(Strategy s) const {
  for (const StrategySchedule& sch : schedules_)
    if (sch.strategy == s) return sch;
  fail(ErrorCode::invalid_argument, "StrategyBench: strategy not built: " + to_string(s));
}

StrategyBench::Outcome StrategyBench::evaluate(Strategy s, const CMatrix& h_err, const ControlErrors& errors) const {
  // Which segments carry the flip-angle error is decided by their role; under
  // the DD-pulse model the NoDD schedule is error-free.
  const CMatrix u = simulate_schedule(space_, schedule(s).segments, h_err, errors);
  return {distance(u, target_), infidelity(u, target_, protocol_.initial)};
}

StrategyBench::Outcome StrategyBench::mean(Strategy s, std::span<const NoiseShape> shapes, double delta,
                                           double dipolar, const ControlErrors& errors) const {
  require(!shapes.empty(), ErrorCode::invalid_argument, "StrategyBench::mean: no instances");
  Outcome m;
  for (const NoiseShape& sh : shapes) {
    const Outcome o = evaluate(s, sh.at(delta, dipolar), errors);
    m.distance += o.distance;
    m.infidelity += o.infidelity;
  }
  m.distance /= static_cast<double>(shapes.size());
  m.infidelity /= static_cast<double>(shapes.size());
  return m;
}

std::vector<GridRow> run_noise_grid(const StrategyBench& bench, const NoiseGridSpec& spec) {
  require(!spec.disorder.empty() && !spec.dipolar.empty(), ErrorCode::invalid_argument, "noise grid: empty axis");
  for (double v : spec.disorder) require(v >= 0.0, ErrorCode::invalid_argument, "noise grid: negative disorder");
  for (double v : spec.dipolar) require(v >= 0.0, ErrorCode::invalid_argument, "noise grid: negative dipolar norm");
  const std::vector<NoiseShape> shapes = noise_shapes(bench.space().n, spec.instances, spec.rwa, spec.seed);
  const std::vector<Strategy>& strat = bench.strategies();
  const std::size_t cells = spec.disorder.size() * spec.dipolar.size();
  const std::size_t ni = shapes.size(), ns = strat.size();
  std::vector<StrategyBench::Outcome> out(cells * ni * ns);
  parallel_for(
      cells * ni,
      [&](std::size_t task) {
        const std::size_t cell = task / ni, inst = task % ni;
        const double d = spec.disorder[cell / spec.dipolar.size()];
        const double D = spec.dipolar[cell % spec.dipolar.size()];
        const CMatrix h = shapes[inst].at(d, D);
        for (std::size_t k = 0; k < ns; ++k) out[task * ns + k] = bench.evaluate(strat[k], h);
      },
      spec.workers);
  std::vector<GridRow> rows;
  for (std::size_t cell = 0; cell < cells; ++cell)
    for (std::size_t k = 0; k < ns; ++k) {
      GridRow r;
      r.disorder = spec.disorder[cell / spec.dipolar.size()];
      r.dipolar = spec.dipolar[cell % spec.dipolar.size()];
      r.strategy = strat[k];
      for (std::size_t inst = 0; inst < ni; ++inst) {
        r.distance += out[(cell * ni + inst) * ns + k].distance;
        r.infidelity += out[(cell * ni + inst) * ns + k].infidelity;
      }
      r.distance /= static_cast<double>(ni);
      r.infidelity /= static_cast<double>(ni);
      rows.push_back(r);
    }
  std::stable_sort(rows.begin(), rows.end(), [](const GridRow& a, const GridRow& b) {
    if (a.disorder != b.disorder) return a.disorder < b.disorder;
    if (a.dipolar != b.dipolar) return a.dipolar < b.dipolar;
    return strategy_rank(a.strategy) < strategy_rank(b.strategy);
  });
  return rows;
}

Crossover find_crossover(const StrategyBench& bench, Strategy s, std::span<const NoiseShape> shapes, Regime regime,
                         double ratio, double log_lo, double log_hi, double tol) {
  require(s != Strategy::nodd, ErrorCode::invalid_argument, "find_crossover: compare a DCG strategy against NoDD");
  require(log_lo < log_hi && tol > 0.0, ErrorCode::invalid_argument, "find_crossover: bad bracket");
  // positive where the strategy beats NoDD
  auto gain = [&](double lx) {
    const auto [d, D] = split_dominant(regime, ratio, std::pow(10.0, lx));
    return bench.mean(Strategy::nodd, shapes, d, D).distance - bench.mean(s, shapes, d, D).distance;
  };
  Crossover c;
  if (!(gain(log_lo) > 0.0) || !(gain(log_hi) < 0.0)) return c;
  double lo = log_lo, hi = log_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (gain(mid) > 0.0 ? lo : hi) = mid;
  }
  c.found = true;
  c.log10_noise = 0.5 * (lo + hi);
  const auto [d, D] = split_dominant(regime, ratio, std::pow(10.0, c.log10_noise));
  c.nodd_infidelity = bench.mean(Strategy::nodd, shapes, d, D).infidelity;
  return c;
}

namespace {

// Mean over shapes at fixed |H_err| / chi; each instance is rescaled to the
// requested norm, so instances differ only in shape.
StrategyBench::Outcome control_mean(const StrategyBench& bench, Strategy s, std::span<const NoiseShape> shapes,
                                    Regime regime, double ratio, double noise, const ControlErrors& errors) {
  StrategyBench::Outcome m;
  for (const NoiseShape& sh : shapes) {
    const auto [d, D] = scale_to_norm(sh, regime, ratio, noise);
    const StrategyBench::Outcome o = bench.evaluate(s, sh.at(d, D), errors);
    m.distance += o.distance;
    m.infidelity += o.infidelity;
  }
  m.distance /= static_cast<double>(shapes.size());
  m.infidelity /= static_cast<double>(shapes.size());
  return m;
}

}  // namespace

std::vector<ControlRow> run_control_grid(const StrategyBench& bench, const ControlGridSpec& spec) {
  require(!spec.noise.empty() && !spec.epsilon.empty(), ErrorCode::invalid_argument, "control grid: empty axis");
  const std::vector<NoiseShape> shapes = noise_shapes(bench.space().n, spec.instances, spec.rwa, spec.seed);
  const std::vector<Strategy>& strat = bench.strategies();
  const std::size_t cells = spec.noise.size() * spec.epsilon.size();
  const std::size_t ni = shapes.size(), ns = strat.size();
  std::vector<StrategyBench::Outcome> out(cells * ni * ns);
  parallel_for(
      cells * ni,
      [&](std::size_t task) {
        const std::size_t cell = task / ni, inst = task % ni;
        const double h = spec.noise[cell / spec.epsilon.size()];
        const double eps = spec.epsilon[cell % spec.epsilon.size()];
        const auto [d, D] = scale_to_norm(shapes[inst], spec.regime, spec.ratio, h);
        const CMatrix hm = shapes[inst].at(d, D);
        const ControlErrors errors = ControlErrors::of_type(spec.type, eps);
        for (std::size_t k = 0; k < ns; ++k) out[task * ns + k] = bench.evaluate(strat[k], hm, errors);
      },
      spec.workers);
  std::vector<ControlRow> rows;
  for (std::size_t cell = 0; cell < cells; ++cell)
    for (std::size_t k = 0; k < ns; ++k) {
      ControlRow r;
      r.noise = spec.noise[cell / spec.epsilon.size()];
      r.epsilon = spec.epsilon[cell % spec.epsilon.size()];
      r.strategy = strat[k];
      for (std::size_t inst = 0; inst < ni; ++inst) {
        r.distance += out[(cell * ni + inst) * ns + k].distance;
        r.infidelity += out[(cell * ni + inst) * ns + k].infidelity;
      }
      r.distance /= static_cast<double>(ni);
      r.infidelity /= static_cast<double>(ni);
      rows.push_back(r);
    }
  std::stable_sort(rows.begin(), rows.end(), [](const ControlRow& a, const ControlRow& b) {
    if (a.noise != b.noise) return a.noise < b.noise;
    if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
    return strategy_rank(a.strategy) < strategy_rank(b.strategy);
  });
  return rows;
}

Boundary advantage_boundary(const StrategyBench& bench, Strategy s, std::span<const NoiseShape> shapes,
                            ControlErrorType type, Regime regime, double ratio, double noise, double log_lo,
                            double log_hi, double tol) {
  require(s != Strategy::nodd, ErrorCode::invalid_argument, "advantage_boundary: compare a DCG strategy against NoDD");
  require(log_lo < log_hi && tol > 0.0, ErrorCode::invalid_argument, "advantage_boundary: bad bracket");
  auto gain = [&](double le) {
    const ControlErrors errors = ControlErrors::of_type(type, std::pow(10.0, le));
    return control_mean(bench, Strategy::nodd, shapes, regime, ratio, noise, errors).distance -
           control_mean(bench, s, shapes, regime, ratio, noise, errors).distance;
  };
  Boundary b;
  b.noise = noise;
  if (!(gain(log_lo) > 0.0) || !(gain(log_hi) < 0.0)) return b;
  double lo = log_lo, hi = log_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (gain(mid) > 0.0 ? lo : hi) = mid;
  }
  b.found = true;
  b.log10_epsilon = 0.5 * (lo + hi);
  return b;
}

CsvTable noise_grid_table(const StrategyBench& bench, const NoiseGridSpec& spec, std::span<const GridRow> rows) {
  CsvTable t;
  t.schema = "acspin.noise_grid/1";
  describe_bench(t, bench);
  t.set("instances", std::to_string(spec.instances));
  t.set("rwa", spec.rwa ? "true" : "false");
  t.set("seed", std::to_string(spec.seed));
  t.set("disorder_grid", join(spec.disorder));
  t.set("dipolar_grid", join(spec.dipolar));
  t.columns = {"disorder", "dipolar", "strategy", "mean_distance", "mean_infidelity"};
  for (const GridRow& r : rows)
    t.add_row({format_number(r.disorder), format_number(r.dipolar), to_string(r.strategy), format_number(r.distance),
               format_number(r.infidelity)});
  return t;
}

CsvTable control_grid_table(const StrategyBench& bench, const ControlGridSpec& spec, std::span<const ControlRow> rows) {
  CsvTable t;
  t.schema = "acspin.control_grid/1";
  describe_bench(t, bench);
  t.set("error_type", to_string(spec.type));
  t.set("regime", to_string(spec.regime));
  t.set("ratio", format_number(spec.ratio));
  t.set("instances", std::to_string(spec.instances));
  t.set("rwa", spec.rwa ? "true" : "false");
  t.set("seed", std::to_string(spec.seed));
  t.set("noise_grid", join(spec.noise));
  t.set("epsilon_grid", join(spec.epsilon));
  t.columns = {"noise", "epsilon", "strategy", "mean_distance", "mean_infidelity"};
  for (const ControlRow& r : rows)
    t.add_row({format_number(r.noise), format_number(r.epsilon), to_string(r.strategy), format_number(r.distance),
               format_number(r.infidelity)});
  return t;
}

}  // namespace acspin
