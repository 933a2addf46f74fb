// Copyright 2026 The qanneal Authors
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

// qanneal: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 validation, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qanneal/analysis.hpp"
#include "qanneal/errors.hpp"
#include "qanneal/evolution.hpp"
#include "qanneal/instance_io.hpp"
#include "qanneal/problem.hpp"
#include "qanneal/rng.hpp"
#include "qanneal/spectrum.hpp"
#include "qanneal/sweep.hpp"
#include "qanneal/twospin.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace qanneal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::string num(double v) { return format_number(v); }

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path);
  out << text;
}

struct SharedOptions {
  std::string instance;
  std::string trigger = "none";
  double g = 0.0;
  bool nonstoquastic = false;
};

SpinProblem load_problem(const SharedOptions& o) {
  SpinProblem p = resolve_instance(o.instance);
  if (o.nonstoquastic) p = p.with_y_couplings(0.5);
  return p;
}

TriggerSpec trigger_of(const SharedOptions& o) {
  TriggerSpec t;
  t.kind = parse_trigger_kind(o.trigger);
  t.g = t.kind == TriggerKind::None ? 0.0 : o.g;
  t.validate();
  return t;
}

void add_shared(CLI::App* cmd, SharedOptions& o) {
  cmd->add_option("instance", o.instance, "Instance file or fixture:<label> (709, 950, 103, 99)")->required();
  cmd->add_option("--trigger", o.trigger, "none, ferro or antiferro")->capture_default_str();
  cmd->add_option("--g", o.g, "Trigger strength")->capture_default_str();
  cmd->add_flag("--nonstoquastic", o.nonstoquastic, "Add 0.5 sy sy couplings on the coupling graph");
}

json truth_json(const GroundTruth& t) {
  return {{"bitstring", t.bitstring},
          {"energy", t.energy},
          {"degeneracy", t.degeneracy},
          {"first_excited_energy", t.first_excited_energy},
          {"first_excited_degeneracy", t.first_excited_degeneracy}};
}

// ---- generate ---------------------------------------------------------------

struct GenerateOptions {
  int n = 12;
  int count = 1;
  std::uint64_t seed = 1;
  std::string out = "instances";
  bool nonstoquastic = false;
  std::string format = "tabular";
};

int cmd_generate(const GenerateOptions& o) {
  if (o.n < 2 || o.n > kMaxBruteForceSpins) {
    throw CapacityError("instance generation supports 2 <= n <= " + std::to_string(kMaxBruteForceSpins));
  }
  if (o.count < 1) throw ValidationError("count must be positive");
  InstanceFormat fmt = o.format == "structured" ? InstanceFormat::Structured : InstanceFormat::Tabular;
  if (o.format != "structured" && o.format != "tabular") throw ValidationError("unknown format " + o.format);
  if (o.nonstoquastic) fmt = InstanceFormat::Structured;  // tabular cannot carry y-couplings
  fs::create_directories(o.out);
  json manifest;
  manifest["version"] = QANNEAL_VERSION;
  manifest["n"] = o.n;
  manifest["count"] = o.count;
  manifest["seed"] = o.seed;
  manifest["nonstoquastic"] = o.nonstoquastic;
  manifest["instances"] = json::array();
  for (int i = 0; i < o.count; ++i) {
    const std::uint64_t seed = derive_seed(o.seed, static_cast<std::uint64_t>(i));
    const GeneratedInstance g = generate_2sat_instance(o.n, seed);
    SpinProblem p = map_formula_to_problem(g.formula, o.nonstoquastic);
    char name[64];
    std::snprintf(name, sizeof name, "instance_%04d", i);
    p.label = name;
    p.seed = seed;
    const std::string file = std::string(name) + (fmt == InstanceFormat::Tabular ? ".txt" : ".json");
    save_instance(fs::path(o.out) / file, p, fmt);
    json clauses = json::array();
    for (const auto& c : g.formula.clauses) {
      clauses.push_back({(c.neg_a ? -1 : 1) * c.var_a, (c.neg_b ? -1 : 1) * c.var_b});
    }
    manifest["instances"].push_back({{"file", file},
                                     {"seed", seed},
                                     {"attempts", g.attempts},
                                     {"clauses", clauses},
                                     {"ground_truth", truth_json(g.truth)}});
  }
  emit((fs::path(o.out) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << "wrote " << o.count << " instances to " << o.out << "\n";
  return kExitOk;
}

// ---- anneal -----------------------------------------------------------------

struct AnnealOptions {
  SharedOptions shared;
  double t_anneal = 100.0;
  double tau = 0.01;
  bool trace = false;
  int k = 3;
  int stride = 0;
  std::uint64_t seed = 1;
  std::string out = "anneal_trace";
};

int cmd_anneal(const AnnealOptions& o) {
  const SpinProblem p = load_problem(o.shared);
  const TriggerSpec t = trigger_of(o.shared);
  EvolutionConfig cfg;
  cfg.t_anneal = o.t_anneal;
  cfg.tau = o.tau;
  cfg.record_stride = o.stride;
  const GroundTruth truth = brute_force_solve(p);
  json row;
  row["instance"] = p.label;
  row["n"] = p.n;
  row["trigger"] = to_string(t.kind);
  row["g"] = t.g;
  row["t_anneal"] = o.t_anneal;
  if (o.trace) {
    const OverlapTrace tr = overlap_trace(p, t, cfg, o.k, o.seed);
    std::ostringstream ov;
    ov << "s";
    for (int q = 0; q < o.k; ++q) ov << ",overlap" << q;
    for (int q = 0; q < o.k; ++q) ov << ",E" << q;
    ov << ",avg_energy\n";
    for (std::size_t i = 0; i < tr.s.size(); ++i) {
      ov << num(tr.s[i]);
      for (double x : tr.overlaps[i]) ov << ',' << num(x);
      for (double e : tr.energies[i]) ov << ',' << num(e);
      ov << ',' << num(tr.avg_energy[i]) << '\n';
    }
    emit((fs::path(o.out) / "overlap.csv").string(), ov.str());
    row["trace"] = (fs::path(o.out) / "overlap.csv").string();
    row["p"] = tr.success_probability;
    row["final_norm"] = tr.final_norm;
    const StepPlan plan = plan_steps(cfg);
    row["tau"] = plan.tau;
    row["steps"] = plan.steps;
    row["tau_adjusted"] = plan.adjusted;
  } else {
    const AnnealResult r = evolve(p, t, cfg, &truth);
    row["tau"] = r.plan.tau;
    row["steps"] = r.plan.steps;
    row["tau_adjusted"] = r.plan.adjusted;
    row["p"] = r.success_probability;
    row["final_norm"] = r.final_norm;
  }
  row["ground_truth"] = truth_json(truth);
  std::cout << row.dump(2) << "\n";
  return kExitOk;
}

// ---- spectrum ---------------------------------------------------------------

struct SpectrumOptions {
  SharedOptions shared;
  int grid = 1001;
  int k = 3;
  std::uint64_t seed = 1;
  bool no_refine = false;
  double prominence = 0.1;
  std::string out;
};

int cmd_spectrum(const SpectrumOptions& o) {
  const SpinProblem p = load_problem(o.shared);
  const TriggerSpec t = trigger_of(o.shared);
  GapProfileOptions go;
  go.grid_points = o.grid;
  go.k = o.k;
  go.seed = o.seed;
  go.refine = !o.no_refine;
  go.prominence_ratio = o.prominence;
  const GapProfile prof = gap_profile(p, t, go);
  std::ostringstream table;
  write_profile_table(table, prof);
  json summary;
  summary["instance"] = p.label;
  summary["trigger"] = to_string(t.kind);
  summary["g"] = t.g;
  summary["grid"] = o.grid;
  summary["samples"] = prof.samples.size();
  summary["delta_min"] = prof.delta_min;
  summary["s_min"] = prof.s_min;
  summary["n_anticrossings"] = prof.anticrossings.size();
  summary["stretch_width"] = prof.stretch_width;
  summary["anticrossings"] = json::array();
  for (const auto& a : prof.anticrossings) {
    summary["anticrossings"].push_back({{"s", a.s}, {"delta", a.delta}, {"prominence", a.prominence}});
  }
  if (o.out.empty()) {
    std::cout << table.str();
    std::cerr << summary.dump(2) << "\n";
  } else {
    emit(o.out, table.str());
    std::cout << summary.dump(2) << "\n";
  }
  return kExitOk;
}

// ---- sweep ------------------------------------------------------------------

struct SweepOptions {
  int n = 10;
  int count = 10;
  std::uint64_t seed = 1;
  std::vector<std::string> files;
  bool nonstoquastic = false;
  std::vector<std::string> triggers = {"none"};
  std::vector<double> t_anneals = {10.0, 100.0, 1000.0};
  double tau = 0.01;
  int grid = 1001;
  int k = 3;
  bool no_spectrum = false;
  int workers = 1;
  std::string out = "sweep";
};

int cmd_sweep(const SweepOptions& o) {
  SweepConfig c;
  c.n = o.n;
  c.count = o.count;
  c.seed = o.seed;
  c.files = o.files;
  c.nonstoquastic = o.nonstoquastic;
  c.triggers.clear();
  for (const auto& t : o.triggers) c.triggers.push_back(parse_trigger(t));
  c.t_anneals = o.t_anneals;
  c.tau = o.tau;
  c.grid_points = o.grid;
  c.k = o.k;
  c.spectrum = !o.no_spectrum;
  c.workers = o.workers;
  c.out_dir = o.out;
  const SweepSummary s = run_sweep(c, [](const SweepRow& r) {
    if (!r.ok()) std::cerr << "row failed: " << r.instance << " " << r.status << "\n";
  });
  json j = {{"results", s.results.string()},
            {"rows_written", s.rows_written},
            {"rows_skipped", s.rows_skipped},
            {"rows_failed", s.rows_failed}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---- fit --------------------------------------------------------------------

struct FitOptions {
  std::string results;
  std::string trigger;
  std::vector<double> g;
  std::vector<double> t_anneal;
  double max_rms = 0.1;
  std::string out;
};

int cmd_fit(const FitOptions& o) {
  const auto rows = read_sweep_csv(o.results);
  FitFilter f;
  if (!o.trigger.empty()) f.trigger = parse_trigger_kind(o.trigger);
  if (!o.g.empty()) f.g = o.g.front();
  if (!o.t_anneal.empty()) f.t_anneal = o.t_anneal.front();
  const auto fits = run_fit(rows, f, o.max_rms);
  for (const auto& x : fits) {
    if (!x.notice.empty()) {
      std::cerr << "notice: " << to_string(x.trigger) << " g=" << num(x.g) << " T_A=" << num(x.t_anneal)
                << ": " << x.notice << "\n";
    }
  }
  std::ostringstream out;
  write_fit_csv(out, fits);
  emit(o.out, out.str());
  return kExitOk;
}

// ---- twospin ----------------------------------------------------------------

struct TwoSpinOptions {
  double g = 0.0;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 1.0;
  double sign = -1.0;
  double hx = 1.0;
  int grid = 101;
  std::string out;
};

int cmd_twospin(const TwoSpinOptions& o) {
  if (o.grid < 2) throw ValidationError("grid needs at least 2 points");
  std::ostringstream t;
  t << "s,closed1,closed2,closed3,closed4,E0,E1,E2,E3,delta12_leading,delta34_leading\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < o.grid; ++i) {
    TwoSpinParams p{o.g, o.jx, o.jy, o.jz, i == o.grid - 1 ? 1.0 : static_cast<double>(i) / (o.grid - 1),
                    o.sign, o.hx};
    std::array<double, 4> closed{nan, nan, nan, nan};
    try {
      closed = twospin_eigenvalues_closed_form(p);
    } catch (const DomainError&) {
    }
    const auto e = twospin_spectrum_numeric(p);
    TwoSpinGaps gaps{nan, nan};
    try {
      gaps = twospin_gap_leading_order(p);
    } catch (const DomainError&) {
    }
    t << num(p.s);
    for (double x : closed) t << ',' << (std::isnan(x) ? "nan" : num(x));
    for (double x : e) t << ',' << num(x);
    t << ',' << (std::isnan(gaps.delta12) ? "nan" : num(gaps.delta12)) << ','
      << (std::isnan(gaps.delta34) ? "nan" : num(gaps.delta34)) << '\n';
  }
  emit(o.out, t.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum annealing simulator with trigger Hamiltonians"};
  app.set_version_flag("--version", QANNEAL_VERSION);
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Random 2-SAT instances with a unique solution");
  g->add_option("--n", gen.n, "Number of variables")->capture_default_str();
  g->add_option("--count", gen.count, "Number of instances")->capture_default_str();
  g->add_option("--seed", gen.seed, "Master seed")->capture_default_str();
  g->add_option("--out", gen.out, "Output directory")->capture_default_str();
  g->add_option("--format", gen.format, "tabular or structured")->capture_default_str();
  g->add_flag("--nonstoquastic", gen.nonstoquastic, "Add 0.5 sy sy couplings (structured format)");

  AnnealOptions an;
  auto* a = app.add_subcommand("anneal", "Single annealing run");
  add_shared(a, an.shared);
  a->add_option("--ta", an.t_anneal, "Annealing time T_A")->capture_default_str();
  a->add_option("--tau", an.tau, "Time step")->capture_default_str();
  a->add_flag("--trace", an.trace, "Write overlap and average-energy traces");
  a->add_option("--k", an.k, "Instantaneous states in the overlap trace (<= 4)")->capture_default_str();
  a->add_option("--stride", an.stride, "Steps between trace samples (0: about 200 samples)");
  a->add_option("--seed", an.seed, "Lanczos seed for traces")->capture_default_str();
  a->add_option("--out", an.out, "Trace directory")->capture_default_str();

  SpectrumOptions sp;
  auto* s = app.add_subcommand("spectrum", "Gap profile along s");
  add_shared(s, sp.shared);
  s->add_option("--grid", sp.grid, "Uniform grid points (>= 101)")->capture_default_str();
  s->add_option("--k", sp.k, "Eigenpairs per sample")->capture_default_str();
  s->add_option("--seed", sp.seed, "Lanczos seed")->capture_default_str();
  s->add_flag("--no-refine", sp.no_refine, "Skip golden-section refinement of minima");
  s->add_option("--prominence", sp.prominence, "Anticrossing prominence ratio")->capture_default_str();
  s->add_option("--out", sp.out, "Profile table path (summary goes to stdout)");

  SweepOptions sw;
  auto* w = app.add_subcommand("sweep", "Ensemble sweep over triggers and annealing times");
  w->add_option("--n", sw.n, "Variables per generated instance")->capture_default_str();
  w->add_option("--count", sw.count, "Generated instances")->capture_default_str();
  w->add_option("--seed", sw.seed, "Master seed")->capture_default_str();
  w->add_option("--instances", sw.files, "Instance files or fixture:<label> instead of generating");
  w->add_flag("--nonstoquastic", sw.nonstoquastic, "Generate nonstoquastic problems");
  w->add_option("--triggers", sw.triggers, "e.g. none ferro:1.0 antiferro:0.5")->capture_default_str();
  w->add_option("--ta", sw.t_anneals, "Annealing times")->capture_default_str();
  w->add_option("--tau", sw.tau, "Time step")->capture_default_str();
  w->add_option("--grid", sw.grid, "Spectrum grid points")->capture_default_str();
  w->add_option("--k", sw.k, "Eigenpairs per spectrum sample")->capture_default_str();
  w->add_flag("--no-spectrum", sw.no_spectrum, "Skip gap profiles");
  w->add_option("--workers", sw.workers, "Worker threads")->capture_default_str();
  w->add_option("--out", sw.out, "Output directory")->capture_default_str();

  FitOptions fi;
  auto* f = app.add_subcommand("fit", "Landau-Zener fits per (trigger, g, T_A) group");
  f->add_option("results", fi.results, "results.csv from a sweep")->required();
  f->add_option("--trigger", fi.trigger, "Keep one trigger kind");
  f->add_option("--g", fi.g, "Keep one trigger strength")->expected(1);
  f->add_option("--ta", fi.t_anneal, "Keep one annealing time")->expected(1);
  f->add_option("--max-rms", fi.max_rms, "RMS error above which a fit is flagged unreliable")
      ->capture_default_str();
  f->add_option("--out", fi.out, "Output CSV (default stdout)");

  TwoSpinOptions ts;
  auto* t = app.add_subcommand("twospin", "Two-spin spectra: closed form, numeric and leading-order gaps");
  t->add_option("--g", ts.g, "Trigger strength")->capture_default_str();
  t->add_option("--jx", ts.jx, "xx coupling")->capture_default_str();
  t->add_option("--jy", ts.jy, "yy coupling")->capture_default_str();
  t->add_option("--jz", ts.jz, "zz coupling")->capture_default_str();
  t->add_option("--sign", ts.sign, "Trigger sign in the numeric model (-1 or +1)")->capture_default_str();
  t->add_option("--hx", ts.hx, "Transverse field in the numeric model")->capture_default_str();
  t->add_option("--grid", ts.grid, "Points in s")->capture_default_str();
  t->add_option("--out", ts.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*a) return cmd_anneal(an);
    if (*s) return cmd_spectrum(sp);
    if (*w) return cmd_sweep(sw);
    if (*f) return cmd_fit(fi);
    if (*t) return cmd_twospin(ts);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
