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


// Experiment driver. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "acspin/acspin.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUnconverged = 2;

// Thrown on a failed library call; carries the status for the exit code.
struct LibraryError : std::runtime_error {
  acs_status status;
  LibraryError(acs_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(acs_status s, const char* what) {
  if (s != ACS_OK)
    throw LibraryError(s, std::string(what) + ": " + acs_status_name(s) + ": " + acs_last_error());
}

struct StringDeleter {
  void operator()(char* p) const { acs_string_free(p); }
};
using LibString = std::unique_ptr<char, StringDeleter>;

struct ProtocolDeleter {
  void operator()(acs_protocol* p) const { acs_protocol_free(p); }
};
struct SequenceDeleter {
  void operator()(acs_sequence* p) const { acs_sequence_free(p); }
};
struct BenchDeleter {
  void operator()(acs_bench* p) const { acs_bench_free(p); }
};
using Protocol = std::unique_ptr<acs_protocol, ProtocolDeleter>;
using Sequence = std::unique_ptr<acs_sequence, SequenceDeleter>;
using Bench = std::unique_ptr<acs_bench, BenchDeleter>;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

// "lo:hi:points" (log-spaced) or "a,b,c".
std::vector<double> parse_axis(const std::string& spec, const std::string& what) {
  std::vector<double> out;
  try {
    if (spec.find(':') != std::string::npos) {
      std::vector<std::string> parts;
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
      if (parts.size() != 3) throw std::invalid_argument("expected lo:hi:points");
      const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
      const int n = std::stoi(parts[2]);
      if (!(lo > 0.0) || hi < lo || n < 1) throw std::invalid_argument("need 0 < lo <= hi and points >= 1");
      for (int k = 0; k < n; ++k)
        out.push_back(n == 1 ? lo : std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * k / (n - 1)));
      out.front() = lo;
      if (n > 1) out.back() = hi;
    } else {
      std::stringstream ss(spec);
      for (std::string p; std::getline(ss, p, ',');) out.push_back(std::stod(p));
    }
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--" + what, "bad grid spec '" + spec + "': " + e.what());
  }
  if (out.empty()) throw CLI::ValidationError("--" + what, "empty grid");
  return out;
}

unsigned strategy_mask(const std::vector<std::string>& names) {
  unsigned m = 0;
  for (const std::string& s : names) {
    if (s == "nodd")
      m |= ACS_STRATEGY_NODD;
    else if (s == "dcg_per_pulse")
      m |= ACS_STRATEGY_PER_PULSE;
    else if (s == "dcg_per_cycle")
      m |= ACS_STRATEGY_PER_CYCLE;
    else
      throw CLI::ValidationError("--strategies", "unknown strategy " + s);
  }
  return m;
}

// JSON config file: one object per subcommand, keyed by its name, whose
// keys are the long flag names without dashes, e.g.
//   {"noise-grid": {"instances": 5, "strategies": ["nodd", "dcg_per_pulse"]}}
// Arrays become repeated values, true/false toggle flags.
class ConfigJSON : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::ordered_json j;
    for (const CLI::App* sub : app->get_subcommands({})) {
      nlohmann::ordered_json section = nlohmann::ordered_json::object();
      for (const CLI::Option* opt : sub->get_options({})) {
        if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
        if (opt->count() == 0 && !default_also) continue;
        const std::string name = opt->get_lnames()[0];
        if (opt->get_type_size() == 0) {
          section[name] = opt->count() > 0;
          continue;
        }
        const std::vector<std::string> vals = opt->count() ? opt->results()
                                                           : std::vector<std::string>{opt->get_default_str()};
        if (vals.size() == 1)
          section[name] = vals[0];
        else
          section[name] = vals;
      }
      j[sub->get_name()] = section;
    }
    return j.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [sub, section] : j.items()) {
      if (!section.is_object()) throw CLI::ConversionError("config section '" + sub + "' must be an object");
      for (const auto& [key, value] : section.items()) {
        CLI::ConfigItem item;
        item.parents = {sub};
        item.name = key;
        if (value.is_array()) {
          for (const auto& v : value) item.inputs.push_back(scalar(v));
        } else {
          item.inputs.push_back(scalar(value));
        }
        items.push_back(std::move(item));
      }
    }
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config values must be strings, numbers or booleans");
  }
};

// ---- generate

struct GenerateArgs {
  double j = 0.0;
  int t = 0;
  int nc = 0;
  std::uint64_t seed = 1;
  bool analytic = false;
  int starts = 32;
  long budget = 20000;
  bool min_squeezing = false;
  double target = 1e-7;
  int workers = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  acs_generate_options o;
  acs_generate_options_init(&o);
  const double two_j = 2.0 * a.j;
  if (std::abs(two_j - std::round(two_j)) > 1e-12 || two_j < 1)
    throw CLI::ValidationError("--j", "j must be a positive half-integer");
  o.two_j = static_cast<int>(std::lround(two_j));
  o.t = a.t;
  o.n_cycles = a.nc;
  o.seed = a.seed;
  o.analytic = a.analytic ? 1 : 0;
  o.max_starts = a.starts;
  o.budget = a.budget;
  o.min_squeezing = a.min_squeezing ? 1 : 0;
  o.target_deviation = a.target;
  o.workers = a.workers;
  acs_protocol* raw = nullptr;
  const acs_status s = acs_protocol_generate(&o, &raw);
  Protocol p(raw);
  if (s != ACS_OK && s != ACS_UNCONVERGED) check(s, "generate");
  const std::string note = acs_last_error();
  acs_protocol_info info{};
  check(acs_protocol_get_info(p.get(), &info), "generate");
  std::cerr << "j = " << 0.5 * info.two_j << ", t = " << info.t << ", cycles = " << info.n_cycles << "\n";
  for (std::size_t k = 0; k < info.n_cycles; ++k) {
    double th = 0, eta = 0;
    check(acs_protocol_cycle(p.get(), k, &th, &eta), "generate");
    std::fprintf(stderr, "  cycle %zu: theta = %.10f  eta = %.10f\n", k + 1, th, eta);
  }
  for (int order = 1; order <= info.t; ++order) {
    double d = 0;
    check(acs_protocol_deviation(p.get(), order, &d), "generate");
    std::fprintf(stderr, "  1 - A_%d = %.3e\n", order, d);
  }
  std::fprintf(stderr, "  total rotation %.4f, total squeezing %.4f\n", info.total_rotation, info.total_squeezing);
  char* json = nullptr;
  check(acs_protocol_to_json(p.get(), &json), "generate");
  emit(a.out, LibString(json).get());
  if (s == ACS_UNCONVERGED) {
    std::cerr << "UNCONVERGED: " << note << " (output flagged converged = false)\n";
    return kExitUnconverged;
  }
  std::cerr << "converged\n";
  return 0;
}

// ---- shared bench options

struct BenchArgs {
  std::string params;
  int ghz = 0;
  std::string rot_seq;
  std::string sq_seq;
  double chi = 1.0;
  std::vector<std::string> strategies{"nodd", "dcg_per_pulse", "dcg_per_cycle"};
};

void add_bench_options(CLI::App* sub, BenchArgs& b, bool ghz_default) {
  auto* params = sub->add_option("--params", b.params, "Protocol JSON from 'generate' (N = 2j spins)");
  auto* ghz = sub->add_option("--ghz", b.ghz, "GHZ preparation on this many spins instead of --params");
  if (ghz_default) {
    b.ghz = 4;
    ghz->capture_default_str();
  }
  params->excludes(ghz);
  sub->add_option("--rot-seq", b.rot_seq, "DD sequence JSON protecting rotations and whole cycles")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--sq-seq", b.sq_seq, "DD sequence JSON protecting squeezing pulses")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--chi", b.chi, "Pulse amplitude")->capture_default_str();
  sub->add_option("--strategies", b.strategies, "Subset of nodd, dcg_per_pulse, dcg_per_cycle")
      ->delimiter(',')
      ->capture_default_str();
}

Bench make_bench(const BenchArgs& b) {
  acs_sequence* r = nullptr;
  acs_sequence* q = nullptr;
  check(acs_sequence_load(b.rot_seq.c_str(), &r), "--rot-seq");
  Sequence rot(r);
  check(acs_sequence_load(b.sq_seq.c_str(), &q), "--sq-seq");
  Sequence sq(q);
  acs_bench* raw = nullptr;
  const unsigned mask = strategy_mask(b.strategies);
  if (!b.params.empty()) {
    acs_protocol* p = nullptr;
    check(acs_protocol_load(b.params.c_str(), &p), "--params");
    Protocol proto(p);
    check(acs_bench_create_ac(proto.get(), rot.get(), sq.get(), b.chi, mask, &raw), "bench");
  } else {
    if (b.ghz <= 0) throw CLI::ValidationError("--params", "give --params or --ghz");
    check(acs_bench_create_ghz(b.ghz, rot.get(), sq.get(), b.chi, mask, &raw), "bench");
  }
  return Bench(raw);
}

acs_regime regime_of(const std::string& s) {
  if (s == "disorder") return ACS_DISORDER_DOMINATED;
  if (s == "dipolar") return ACS_DIPOLAR_DOMINATED;
  throw CLI::ValidationError("--regime", "expected disorder or dipolar");
}

// ---- noise grid

struct NoiseGridArgs {
  BenchArgs bench;
  std::string disorder = "1e-4:1e-1:8";
  std::string dipolar = "1e-4:1e-1:8";
  int instances = 20;
  std::uint64_t seed = 1;
  bool general = false;
  int workers = 0;
  bool crossover = false;
  double ratio = 0.1;
  std::string out;
};

int run_noise_grid(const NoiseGridArgs& a) {
  Bench bench = make_bench(a.bench);
  const std::vector<double> d = parse_axis(a.disorder, "disorder");
  const std::vector<double> D = parse_axis(a.dipolar, "dipolar");
  acs_noise_grid g{d.data(), d.size(), D.data(), D.size(), a.instances, a.general ? 0 : 1, a.seed, a.workers};
  char* csv = nullptr;
  check(acs_noise_grid_csv(bench.get(), &g, &csv), "noise-grid");
  emit(a.out, LibString(csv).get());
  if (a.crossover) {
    for (acs_strategy s : {ACS_DCG_PER_PULSE, ACS_DCG_PER_CYCLE})
      for (acs_regime r : {ACS_DISORDER_DOMINATED, ACS_DIPOLAR_DOMINATED}) {
        const acs_search search{r, a.ratio, a.instances, a.general ? 0 : 1, a.seed, -4.0, 0.0};
        int found = 0;
        double x = 0, inf = 0;
        check(acs_crossover(bench.get(), s, &search, &found, &x, &inf), "crossover");
        const char* sn = s == ACS_DCG_PER_PULSE ? "dcg_per_pulse" : "dcg_per_cycle";
        const char* rn = r == ACS_DISORDER_DOMINATED ? "disorder" : "dipolar";
        if (found)
          std::fprintf(stderr, "crossover %s %s-dominated: 10^%.2f (NoDD infidelity 10^%.2f)\n", sn, rn, x,
                       std::log10(inf));
        else
          std::fprintf(stderr, "crossover %s %s-dominated: none in [1e-4, 1]\n", sn, rn);
      }
  }
  return 0;
}

// ---- control-error grid

struct ControlGridArgs {
  BenchArgs bench;
  std::string type;
  std::string regime = "disorder";
  double ratio = 0.1;
  std::string noise = "1e-4:1e-1:8";
  std::string epsilon = "1e-6:1e-1:8";
  bool no_zero = false;
  int instances = 5;
  std::uint64_t seed = 1;
  bool general = false;
  int workers = 0;
  bool boundary = false;
  std::string out;
};

acs_control_error error_of(const std::string& s) {
  if (s == "dd") return ACS_ERROR_DD;
  if (s == "bp_type1") return ACS_ERROR_BP_TYPE1;
  if (s == "bp_type2") return ACS_ERROR_BP_TYPE2;
  throw CLI::ValidationError("--type", "expected dd, bp_type1 or bp_type2");
}

int run_control_grid(const ControlGridArgs& a) {
  Bench bench = make_bench(a.bench);
  const acs_control_error type = error_of(a.type);
  const acs_regime regime = regime_of(a.regime);
  const std::vector<double> h = parse_axis(a.noise, "noise");
  std::vector<double> eps = parse_axis(a.epsilon, "epsilon");
  if (!a.no_zero) eps.insert(eps.begin(), 0.0);
  acs_control_grid g{type,         regime, a.ratio, h.data(), h.size(), eps.data(), eps.size(), a.instances,
                     a.general ? 0 : 1, a.seed, a.workers};
  char* csv = nullptr;
  check(acs_control_grid_csv(bench.get(), &g, &csv), "control-grid");
  emit(a.out, LibString(csv).get());
  if (a.boundary) {
    const acs_search search{regime, a.ratio, a.instances, a.general ? 0 : 1, a.seed, -9.0, -1.0};
    for (acs_strategy s : {ACS_DCG_PER_PULSE, ACS_DCG_PER_CYCLE}) {
      std::vector<double> xs, ys;
      for (double v : h) {
        int found = 0;
        double le = 0;
        check(acs_advantage_boundary(bench.get(), s, type, &search, v, &found, &le), "boundary");
        std::fprintf(stderr, "boundary %s |H|/chi = %.3e: %s", s == ACS_DCG_PER_PULSE ? "dcg_per_pulse" : "dcg_per_cycle",
                     v, found ? "" : "none\n");
        if (found) {
          std::fprintf(stderr, "eps* = 10^%.2f\n", le);
          xs.push_back(v);
          ys.push_back(std::pow(10.0, le));
        }
      }
      if (xs.size() >= 2) {
        double slope = 0, icpt = 0;
        check(acs_fit_loglog(xs.data(), ys.data(), xs.size(), &slope, &icpt), "fit");
        std::fprintf(stderr, "  fit: eps* = 10^%.2f (|H|/chi)^%.3f\n", icpt, slope);
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anticoherent spin-state protocols and dynamically corrected gates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", acs_version());
  app.set_config("--config", "", "JSON file with one section per subcommand mirroring its flags");
  app.config_formatter(std::make_shared<ConfigJSON>());

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Optimize or evaluate control parameters for a t-anticoherent state");
  g->add_option("--j", gen.j, "Spin quantum number")->required();
  g->add_option("--t", gen.t, "Anticoherence order")->required()->check(CLI::PositiveNumber);
  g->add_option("--nc", gen.nc, "Number of cycles (0: t + 1)")->capture_default_str();
  g->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  g->add_flag("--analytic", gen.analytic, "Closed-form parameters (t = 1, t = 2 integer j, t = 3 j = 3)");
  g->add_option("--starts", gen.starts, "Multi-start count")->capture_default_str();
  g->add_option("--budget", gen.budget, "Objective evaluations per start")->capture_default_str();
  g->add_flag("--min-squeezing", gen.min_squeezing, "Select the least-squeezing converged start");
  g->add_option("--target", gen.target, "Convergence threshold on 1 - A_t")->capture_default_str();
  g->add_option("--workers", gen.workers, "Worker threads (0: ACSPIN_WORKERS or all cores)");
  g->add_option("--out", gen.out, "Parameter JSON output (default stdout)");

  int pl_min = 20, pl_max = 200, pl_points = 10, pl_workers = 0;
  std::string pl_out;
  auto* pl = app.add_subcommand("powerlaw", "Refine the power-law squeezing seeds over a range of j");
  pl->add_option("--j-min", pl_min, "Smallest integer j (>= 4)")->capture_default_str();
  pl->add_option("--j-max", pl_max, "Largest integer j")->capture_default_str();
  pl->add_option("--points", pl_points, "Log-spaced j values")->capture_default_str();
  pl->add_option("--workers", pl_workers, "Worker threads");
  pl->add_option("--out", pl_out, "CSV output (default stdout)");

  std::string tr_params, tr_out;
  auto* tr = app.add_subcommand("trace", "Per-step multipole weights |rho_LM|^2 of a protocol");
  tr->add_option("--params", tr_params, "Protocol JSON from 'generate'")->required()->check(CLI::ExistingFile);
  tr->add_option("--out", tr_out, "CSV output (default stdout)");

  NoiseGridArgs ng;
  auto* n = app.add_subcommand("noise-grid", "Mean distance and infidelity over a (delta, Delta) grid");
  add_bench_options(n, ng.bench, false);
  n->add_option("--disorder", ng.disorder, "delta/chi axis: lo:hi:points or a,b,c")->capture_default_str();
  n->add_option("--dipolar", ng.dipolar, "Delta/chi axis: lo:hi:points or a,b,c")->capture_default_str();
  n->add_option("--instances", ng.instances, "Random instances per point")->capture_default_str();
  n->add_option("--seed", ng.seed, "Random seed")->capture_default_str();
  n->add_flag("--general-dipolar", ng.general, "Random dipolar axes instead of the RWA form");
  n->add_option("--workers", ng.workers, "Worker threads");
  n->add_flag("--crossover", ng.crossover, "Also locate where each DCG strategy meets NoDD");
  n->add_option("--ratio", ng.ratio, "Subdominant/dominant ratio for --crossover")->capture_default_str();
  n->add_option("--out", ng.out, "CSV output (default stdout)");

  ControlGridArgs cg;
  auto* c = app.add_subcommand("control-grid", "Distance under flip-angle control errors over (|H_err|, epsilon)");
  add_bench_options(c, cg.bench, true);
  c->add_option("--type", cg.type, "dd, bp_type1 or bp_type2")->required();
  c->add_option("--regime", cg.regime, "disorder or dipolar (dominant noise term)")->capture_default_str();
  c->add_option("--ratio", cg.ratio, "Subdominant/dominant norm ratio")->capture_default_str();
  c->add_option("--noise", cg.noise, "|H_err|/chi axis")->capture_default_str();
  c->add_option("--epsilon", cg.epsilon, "Flip-angle error axis")->capture_default_str();
  c->add_flag("--no-zero", cg.no_zero, "Omit the epsilon = 0 column");
  c->add_option("--instances", cg.instances, "Random instances per point")->capture_default_str();
  c->add_option("--seed", cg.seed, "Random seed")->capture_default_str();
  c->add_flag("--general-dipolar", cg.general, "Random dipolar axes instead of the RWA form");
  c->add_option("--workers", cg.workers, "Worker threads");
  c->add_flag("--boundary", cg.boundary, "Also locate and fit the DCG-advantage boundary");
  c->add_option("--out", cg.out, "CSV output (default stdout)");

  std::string vs_file;
  int vs_n = 4;
  auto* vs = app.add_subcommand("validate-seq", "Check a DD sequence file");
  vs->add_option("file", vs_file, "Sequence JSON")->required()->check(CLI::ExistingFile);
  vs->add_option("--n", vs_n, "Spins used for the decoupling check")->capture_default_str();

  std::string ss_name, ss_axes = "cube", ss_out;
  std::size_t ss_order = 12;
  std::vector<std::string> ss_fam{"disorder", "dipolar_rwa"};
  auto* ss = app.add_subcommand("search-seq", "Search generator pairs for a decoupling group");
  ss->add_option("--name", ss_name, "Sequence name")->required();
  ss->add_option("--order", ss_order, "Group order")->capture_default_str();
  ss->add_option("--axes", ss_axes, "cube or tilted")->capture_default_str();
  ss->add_option("--families", ss_fam, "disorder, dipolar_rwa, dipolar_general, rotation_fde")
      ->delimiter(',')
      ->capture_default_str();
  ss->add_option("--out", ss_out, "Sequence JSON output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*g) return run_generate(gen);
    if (*pl) {
      char* csv = nullptr;
      check(acs_powerlaw_csv(pl_min, pl_max, pl_points, pl_workers, &csv), "powerlaw");
      emit(pl_out, LibString(csv).get());
      return 0;
    }
    if (*tr) {
      acs_protocol* p = nullptr;
      check(acs_protocol_load(tr_params.c_str(), &p), "--params");
      Protocol proto(p);
      char* csv = nullptr;
      check(acs_trace_csv(proto.get(), &csv), "trace");
      emit(tr_out, LibString(csv).get());
      return 0;
    }
    if (*n) return run_noise_grid(ng);
    if (*c) return run_control_grid(cg);
    if (*vs) {
      acs_sequence* s = nullptr;
      check(acs_sequence_load(vs_file.c_str(), &s), vs_file.c_str());
      Sequence seq(s);
      char* report = nullptr;
      double worst = 0;
      const acs_status st = acs_sequence_validate(seq.get(), vs_n, &worst, &report);
      LibString rep(report);
      if (rep) std::cout << rep.get();
      check(st, "validate-seq");
      return 0;
    }
    if (*ss) {
      unsigned fam = 0;
      for (const std::string& f : ss_fam) {
        if (f == "disorder")
          fam |= ACS_FAMILY_DISORDER;
        else if (f == "dipolar_rwa")
          fam |= ACS_FAMILY_DIPOLAR_RWA;
        else if (f == "dipolar_general")
          fam |= ACS_FAMILY_DIPOLAR_GENERAL;
        else if (f == "rotation_fde")
          fam |= ACS_FAMILY_ROTATION_FDE;
        else
          throw CLI::ValidationError("--families", "unknown family " + f);
      }
      if (ss_axes != "cube" && ss_axes != "tilted") throw CLI::ValidationError("--axes", "expected cube or tilted");
      acs_sequence* s = nullptr;
      check(acs_sequence_search(ss_name.c_str(), ss_order, ss_axes == "cube" ? ACS_AXES_CUBE : ACS_AXES_TILTED_CUBE,
                                fam, &s),
            "search-seq");
      Sequence seq(s);
      char* json = nullptr;
      check(acs_sequence_to_json(seq.get(), &json), "search-seq");
      emit(ss_out, LibString(json).get());
      return 0;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
