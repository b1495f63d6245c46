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


#include "acspin/acspin.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "acspin/csv.hpp"
#include "acspin/dcg.hpp"
#include "acspin/dd_sequence.hpp"
#include "acspin/error.hpp"
#include "acspin/experiments.hpp"
#include "acspin/protocol.hpp"

struct acs_protocol {
  acspin::ProtocolRecord record;
};

struct acs_sequence {
  acspin::DDSequence seq;
};

struct acs_bench {
  std::unique_ptr<acspin::StrategyBench> bench;
};

namespace {

thread_local std::string last_error;

acs_status to_status(acspin::ErrorCode c) {
  switch (c) {
    case acspin::ErrorCode::invalid_argument:
      return ACS_INVALID_ARGUMENT;
    case acspin::ErrorCode::dimension_mismatch:
      return ACS_DIMENSION_MISMATCH;
    case acspin::ErrorCode::not_hermitian:
      return ACS_NOT_HERMITIAN;
    case acspin::ErrorCode::unsupported:
      return ACS_UNSUPPORTED;
    case acspin::ErrorCode::unconverged:
      return ACS_UNCONVERGED;
    case acspin::ErrorCode::leakage:
      return ACS_LEAKAGE;
    case acspin::ErrorCode::io:
      return ACS_IO;
    case acspin::ErrorCode::parse:
      return ACS_PARSE;
  }
  return ACS_INTERNAL;
}

acs_status failed(acs_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
acs_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const acspin::Error& e) {
    return failed(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failed(ACS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failed(ACS_INTERNAL, e.what());
  } catch (...) {
    return failed(ACS_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define ACS_REQUIRE_PTR(p) \
  if (!(p)) return failed(ACS_INVALID_ARGUMENT, std::string(__func__) + ": null argument " #p)

std::vector<acspin::Strategy> strategies_from_mask(unsigned mask) {
  std::vector<acspin::Strategy> out;
  if (mask & ACS_STRATEGY_NODD) out.push_back(acspin::Strategy::nodd);
  if (mask & ACS_STRATEGY_PER_PULSE) out.push_back(acspin::Strategy::dcg_per_pulse);
  if (mask & ACS_STRATEGY_PER_CYCLE) out.push_back(acspin::Strategy::dcg_per_cycle);
  acspin::require(!out.empty() && mask < 8u, acspin::ErrorCode::invalid_argument, "no valid strategy in mask");
  return out;
}

acspin::Strategy strategy_of(acs_strategy s) {
  acspin::require(s >= ACS_NODD && s <= ACS_DCG_PER_CYCLE, acspin::ErrorCode::invalid_argument, "unknown strategy");
  return static_cast<acspin::Strategy>(s);
}

acspin::Regime regime_of(acs_regime r) {
  acspin::require(r == ACS_DISORDER_DOMINATED || r == ACS_DIPOLAR_DOMINATED, acspin::ErrorCode::invalid_argument,
                  "unknown regime");
  return r == ACS_DISORDER_DOMINATED ? acspin::Regime::disorder_dominated : acspin::Regime::dipolar_dominated;
}

acspin::ControlErrorType error_of(acs_control_error e) {
  acspin::require(e >= ACS_ERROR_NONE && e <= ACS_ERROR_BP_TYPE2, acspin::ErrorCode::invalid_argument,
                  "unknown control error type");
  return static_cast<acspin::ControlErrorType>(e);
}

std::vector<double> array_of(const double* v, std::size_t n, const char* what) {
  acspin::require(v != nullptr && n > 0, acspin::ErrorCode::invalid_argument, std::string(what) + ": empty grid axis");
  return std::vector<double>(v, v + n);
}

std::vector<acspin::NoiseFamily> families_of(unsigned mask) {
  using acspin::NoiseFamily;
  std::vector<NoiseFamily> out;
  if (mask & ACS_FAMILY_DISORDER) out.push_back(NoiseFamily::disorder);
  if (mask & ACS_FAMILY_DIPOLAR_RWA) out.push_back(NoiseFamily::dipolar_rwa);
  if (mask & ACS_FAMILY_DIPOLAR_GENERAL) out.push_back(NoiseFamily::dipolar_general);
  if (mask & ACS_FAMILY_ROTATION_FDE) out.push_back(NoiseFamily::rotation_fde);
  acspin::require(!out.empty() && mask < 16u, acspin::ErrorCode::invalid_argument, "no valid noise family in mask");
  return out;
}

acs_status make_bench(acspin::PulseProtocol proto, const acs_sequence* rot, const acs_sequence* sq, double chi,
                      unsigned strategies, acs_bench** out) {
  auto b = std::make_unique<acs_bench>();
  b->bench = std::make_unique<acspin::StrategyBench>(std::move(proto), acspin::SequencePair{rot->seq, sq->seq}, chi,
                                                     strategies_from_mask(strategies));
  *out = b.release();
  return ACS_OK;
}

}  // namespace

extern "C" {

const char* acs_version(void) { return "1.0.0"; }

const char* acs_status_name(acs_status status) {
  switch (status) {
    case ACS_OK:
      return "ok";
    case ACS_INVALID_ARGUMENT:
      return "invalid_argument";
    case ACS_DIMENSION_MISMATCH:
      return "dimension_mismatch";
    case ACS_NOT_HERMITIAN:
      return "not_hermitian";
    case ACS_UNSUPPORTED:
      return "unsupported";
    case ACS_UNCONVERGED:
      return "unconverged";
    case ACS_LEAKAGE:
      return "leakage";
    case ACS_IO:
      return "io";
    case ACS_PARSE:
      return "parse";
    case ACS_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* acs_last_error(void) { return last_error.c_str(); }

void acs_string_free(char* s) { std::free(s); }

// ---- protocols

void acs_generate_options_init(acs_generate_options* o) {
  if (!o) return;
  *o = acs_generate_options{};
  o->two_j = 4;
  o->t = 2;
  o->n_cycles = 0;
  o->seed = 1;
  o->analytic = 0;
  o->max_starts = 32;
  o->budget = 20000;
  o->min_squeezing = 0;
  o->target_deviation = 1e-7;
  o->workers = 0;
}

acs_status acs_protocol_generate(const acs_generate_options* o, acs_protocol** out) {
  ACS_REQUIRE_PTR(o);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    const acspin::SpinQuantumNumber j(o->two_j);
    acspin::require(o->t >= 1, acspin::ErrorCode::invalid_argument, "generate: t must be >= 1");
    auto p = std::make_unique<acs_protocol>();
    if (o->analytic) {
      p->record = acspin::make_record(j, o->t, acspin::analytic_params(j, o->t, true), "analytic", o->target_deviation);
    } else {
      acspin::OptimizeOptions opts;
      opts.budget = o->budget;
      opts.max_starts = o->max_starts;
      opts.target_deviation = o->target_deviation;
      opts.selection = o->min_squeezing ? acspin::Selection::min_squeezing : acspin::Selection::best_deviation;
      opts.stop_early = !o->min_squeezing;
      opts.workers = o->workers;
      const int nc = o->n_cycles > 0 ? o->n_cycles : o->t + 1;
      const acspin::OptimizationResult r = acspin::optimize_protocol(j, o->t, nc, o->seed, opts);
      p->record = acspin::make_record(j, o->t, r.cycles, "optimized", o->target_deviation);
    }
    const bool ok = p->record.converged;
    *out = p.release();
    if (!ok) {
      std::ostringstream m;
      m << "not converged: 1 - A_" << (*out)->record.t << " = " << (*out)->record.deviations.back() << " > "
        << o->target_deviation;
      return failed(ACS_UNCONVERGED, m.str());
    }
    return ACS_OK;
  });
}

acs_status acs_protocol_from_json(const char* json, acs_protocol** out) {
  ACS_REQUIRE_PTR(json);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<acs_protocol>();
    p->record = acspin::record_from_json(json);
    *out = p.release();
    return ACS_OK;
  });
}

acs_status acs_protocol_load(const char* path, acs_protocol** out) {
  ACS_REQUIRE_PTR(path);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    auto p = std::make_unique<acs_protocol>();
    p->record = acspin::record_from_json(acspin::read_file(path));
    *out = p.release();
    return ACS_OK;
  });
}

acs_status acs_protocol_to_json(const acs_protocol* p, char** out) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(out);
  return guarded([&] {
    *out = dup_string(acspin::record_to_json(p->record));
    return ACS_OK;
  });
}

acs_status acs_protocol_get_info(const acs_protocol* p, acs_protocol_info* out) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(out);
  const acspin::ProtocolRecord& r = p->record;
  out->two_j = r.j.two_j();
  out->t = r.t;
  out->n_cycles = r.cycles.size();
  out->converged = r.converged ? 1 : 0;
  out->total_rotation = r.cost.total_rotation;
  out->total_squeezing = r.cost.total_squeezing;
  out->max_deviation = r.deviations.empty() ? 1.0 : *std::max_element(r.deviations.begin(), r.deviations.end());
  return ACS_OK;
}

acs_status acs_protocol_deviation(const acs_protocol* p, int order, double* out) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(out);
  if (order < 1 || order > static_cast<int>(p->record.deviations.size()))
    return failed(ACS_INVALID_ARGUMENT, "acs_protocol_deviation: order out of range");
  *out = p->record.deviations[order - 1];
  return ACS_OK;
}

acs_status acs_protocol_cycle(const acs_protocol* p, size_t index, double* theta, double* eta) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(theta);
  ACS_REQUIRE_PTR(eta);
  if (index >= p->record.cycles.size()) return failed(ACS_INVALID_ARGUMENT, "acs_protocol_cycle: index out of range");
  *theta = p->record.cycles[index].theta;
  *eta = p->record.cycles[index].eta;
  return ACS_OK;
}

void acs_protocol_free(acs_protocol* p) { delete p; }

// ---- sequences

acs_status acs_sequence_load(const char* path, acs_sequence** out) {
  ACS_REQUIRE_PTR(path);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<acs_sequence>();
    s->seq = acspin::load_sequence(path);
    *out = s.release();
    return ACS_OK;
  });
}

acs_status acs_sequence_from_json(const char* json, acs_sequence** out) {
  ACS_REQUIRE_PTR(json);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    auto s = std::make_unique<acs_sequence>();
    s->seq = acspin::parse_sequence(json);
    *out = s.release();
    return ACS_OK;
  });
}

acs_status acs_sequence_search(const char* name, size_t group_order, acs_axis_set axes, unsigned families,
                               acs_sequence** out) {
  ACS_REQUIRE_PTR(name);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    acspin::require(axes == ACS_AXES_CUBE || axes == ACS_AXES_TILTED_CUBE, acspin::ErrorCode::invalid_argument,
                    "unknown axis set");
    const auto found =
        acspin::search_sequences(name, group_order,
                                 axes == ACS_AXES_CUBE ? acspin::AxisSet::cube : acspin::AxisSet::tilted_cube,
                                 families_of(families), 1);
    if (found.empty()) return failed(ACS_UNCONVERGED, "no generator pair satisfies the request");
    auto s = std::make_unique<acs_sequence>();
    s->seq = found.front();
    *out = s.release();
    return ACS_OK;
  });
}

acs_status acs_sequence_to_json(const acs_sequence* s, char** out) {
  ACS_REQUIRE_PTR(s);
  ACS_REQUIRE_PTR(out);
  return guarded([&] {
    *out = dup_string(acspin::sequence_to_json(s->seq));
    return ACS_OK;
  });
}

acs_status acs_sequence_get_info(const acs_sequence* s, acs_sequence_info* out) {
  ACS_REQUIRE_PTR(s);
  ACS_REQUIRE_PTR(out);
  out->group_order = s->seq.group.size();
  out->pulse_count = s->seq.pulse_count();
  out->families = 0;
  for (acspin::NoiseFamily f : s->seq.families) out->families |= 1u << static_cast<unsigned>(f);
  return ACS_OK;
}

acs_status acs_sequence_validate(const acs_sequence* s, int n_spins, double* worst_residual, char** report) {
  ACS_REQUIRE_PTR(s);
  return guarded([&] {
    const acspin::SequenceCheck c = acspin::validate_sequence(s->seq, n_spins);
    double worst = 0.0;
    std::ostringstream r;
    r << "sequence " << s->seq.name << ": group order " << s->seq.group.size() << ", " << s->seq.pulse_count()
      << " pulses\n";
    r << "  closed: " << (c.closed ? "yes" : "no") << "\n  eulerian: " << (c.eulerian ? "yes" : "no")
      << "\n  pulse count: " << (c.order_ok ? "ok" : "wrong") << "\n";
    for (const auto& [f, v] : c.residuals) {
      r << "  residual " << acspin::to_string(f) << ": " << v << "\n";
      worst = std::max(worst, v);
    }
    if (!c.message.empty()) r << "  " << c.message << "\n";
    r << (c.ok ? "valid\n" : "INVALID\n");
    if (worst_residual) *worst_residual = worst;
    if (report) *report = dup_string(r.str());
    if (!c.ok) return failed(ACS_INVALID_ARGUMENT, c.message.empty() ? "sequence failed validation" : c.message);
    return ACS_OK;
  });
}

void acs_sequence_free(acs_sequence* s) { delete s; }

// ---- experiments

acs_status acs_powerlaw_csv(int j_min, int j_max, int points, int workers, char** csv) {
  ACS_REQUIRE_PTR(csv);
  return guarded([&] {
    const std::vector<int> js = acspin::powerlaw_j_values(j_min, j_max, points);
    const auto rows = acspin::powerlaw_sweep(js, workers);
    *csv = dup_string(acspin::write_csv(acspin::powerlaw_table(rows)));
    return ACS_OK;
  });
}

acs_status acs_trace_csv(const acs_protocol* p, char** csv) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(csv);
  return guarded([&] {
    const auto rows = acspin::multipole_trace(p->record);
    *csv = dup_string(acspin::write_csv(acspin::trace_table(p->record, rows)));
    return ACS_OK;
  });
}

acs_status acs_bench_create_ac(const acs_protocol* p, const acs_sequence* rot, const acs_sequence* sq, double chi,
                               unsigned strategies, acs_bench** out) {
  ACS_REQUIRE_PTR(p);
  ACS_REQUIRE_PTR(rot);
  ACS_REQUIRE_PTR(sq);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    const int n = p->record.j.two_j();
    acspin::require(n <= 10, acspin::ErrorCode::unsupported, "state preparation benches are limited to 2j <= 10 spins");
    const acs_status st = make_bench(acspin::ac_pulse_protocol(n, p->record.cycles, chi), rot, sq, chi, strategies, out);
    (*out)->bench->annotate("j", acspin::format_number(p->record.j.value()));
    (*out)->bench->annotate("t", std::to_string(p->record.t));
    (*out)->bench->annotate("cycles", acspin::cycles_to_string(p->record.cycles));
    return st;
  });
}

acs_status acs_bench_create_ghz(int n_spins, const acs_sequence* rot, const acs_sequence* sq, double chi,
                                unsigned strategies, acs_bench** out) {
  ACS_REQUIRE_PTR(rot);
  ACS_REQUIRE_PTR(sq);
  ACS_REQUIRE_PTR(out);
  *out = nullptr;
  return guarded([&] {
    acspin::require(n_spins >= 2 && n_spins <= 10, acspin::ErrorCode::invalid_argument, "GHZ bench: need 2..10 spins");
    return make_bench(acspin::ghz_pulse_protocol(n_spins, chi), rot, sq, chi, strategies, out);
  });
}

void acs_bench_free(acs_bench* b) { delete b; }

acs_status acs_noise_grid_csv(const acs_bench* b, const acs_noise_grid* g, char** csv) {
  ACS_REQUIRE_PTR(b);
  ACS_REQUIRE_PTR(g);
  ACS_REQUIRE_PTR(csv);
  return guarded([&] {
    acspin::NoiseGridSpec spec;
    spec.disorder = array_of(g->disorder, g->n_disorder, "disorder");
    spec.dipolar = array_of(g->dipolar, g->n_dipolar, "dipolar");
    spec.instances = g->instances;
    spec.rwa = g->rwa != 0;
    spec.seed = g->seed;
    spec.workers = g->workers;
    const auto rows = acspin::run_noise_grid(*b->bench, spec);
    *csv = dup_string(acspin::write_csv(acspin::noise_grid_table(*b->bench, spec, rows)));
    return ACS_OK;
  });
}

acs_status acs_control_grid_csv(const acs_bench* b, const acs_control_grid* g, char** csv) {
  ACS_REQUIRE_PTR(b);
  ACS_REQUIRE_PTR(g);
  ACS_REQUIRE_PTR(csv);
  return guarded([&] {
    acspin::ControlGridSpec spec;
    spec.type = error_of(g->error_type);
    spec.regime = regime_of(g->regime);
    spec.ratio = g->ratio;
    spec.noise = array_of(g->noise, g->n_noise, "noise");
    spec.epsilon = array_of(g->epsilon, g->n_epsilon, "epsilon");
    spec.instances = g->instances;
    spec.rwa = g->rwa != 0;
    spec.seed = g->seed;
    spec.workers = g->workers;
    const auto rows = acspin::run_control_grid(*b->bench, spec);
    *csv = dup_string(acspin::write_csv(acspin::control_grid_table(*b->bench, spec, rows)));
    return ACS_OK;
  });
}

acs_status acs_crossover(const acs_bench* b, acs_strategy s, const acs_search* search, int* found,
                         double* log10_noise, double* nodd_infidelity) {
  ACS_REQUIRE_PTR(b);
  ACS_REQUIRE_PTR(search);
  ACS_REQUIRE_PTR(found);
  return guarded([&] {
    const auto shapes = acspin::noise_shapes(b->bench->space().n, search->instances, search->rwa != 0, search->seed);
    const acspin::Crossover c = acspin::find_crossover(*b->bench, strategy_of(s), shapes, regime_of(search->regime),
                                                       search->ratio, search->log_lo, search->log_hi);
    *found = c.found ? 1 : 0;
    if (log10_noise) *log10_noise = c.log10_noise;
    if (nodd_infidelity) *nodd_infidelity = c.nodd_infidelity;
    return ACS_OK;
  });
}

acs_status acs_advantage_boundary(const acs_bench* b, acs_strategy s, acs_control_error type,
                                  const acs_search* search, double noise, int* found, double* log10_epsilon) {
  ACS_REQUIRE_PTR(b);
  ACS_REQUIRE_PTR(search);
  ACS_REQUIRE_PTR(found);
  return guarded([&] {
    const auto shapes = acspin::noise_shapes(b->bench->space().n, search->instances, search->rwa != 0, search->seed);
    const acspin::Boundary r =
        acspin::advantage_boundary(*b->bench, strategy_of(s), shapes, error_of(type), regime_of(search->regime),
                                   search->ratio, noise, search->log_lo, search->log_hi);
    *found = r.found ? 1 : 0;
    if (log10_epsilon) *log10_epsilon = r.log10_epsilon;
    return ACS_OK;
  });
}

acs_status acs_fit_loglog(const double* x, const double* y, size_t n, double* slope, double* intercept) {
  ACS_REQUIRE_PTR(x);
  ACS_REQUIRE_PTR(y);
  ACS_REQUIRE_PTR(slope);
  return guarded([&] {
    const acspin::LineFit f = acspin::fit_loglog(std::span<const double>(x, n), std::span<const double>(y, n));
    *slope = f.slope;
    if (intercept) *intercept = f.intercept;
    return ACS_OK;
  });
}

}  // extern "C"
