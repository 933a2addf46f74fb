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

#include "qanneal/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "qanneal/errors.hpp"
#include "qanneal/evolution.hpp"
#include "qanneal/fixtures.hpp"
#include "qanneal/instance_io.hpp"
#include "qanneal/rng.hpp"
#include "qanneal/spectrum.hpp"

namespace qanneal {

SpinProblem resolve_instance(const std::string& source) {
  constexpr std::string_view prefix = "fixture:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string tail = source.substr(prefix.size());
    int label = 0;
    try {
      std::size_t used = 0;
      label = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::logic_error&) {
      throw ValidationError("unknown fixture '" + tail + "'");
    }
    return fixture_problem(label);
  }
  return load_instance(source);
}

TriggerSpec parse_trigger(const std::string& text) {
  const auto colon = text.find(':');
  TriggerSpec t;
  t.kind = parse_trigger_kind(text.substr(0, colon));
  if (colon != std::string::npos) {
    const std::string tail = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      t.g = std::stod(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::logic_error&) {
      throw ValidationError("bad trigger strength in '" + text + "'");
    }
  } else if (t.kind != TriggerKind::None) {
    throw ValidationError("trigger '" + text + "' needs a strength, e.g. ferro:1.0");
  }
  t.validate();
  return t;
}

namespace {

double trigger_g(const TriggerSpec& t) { return t.kind == TriggerKind::None ? 0.0 : t.g; }

using RowKey = std::tuple<std::string, std::string, double, double>;

RowKey key_of(const std::string& label, TriggerKind kind, double g, double t_anneal) {
  return {label, to_string(kind), g, t_anneal};
}

std::string clean(std::string text) {
  std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '\n' || c == '\r'; }, ';');
  return text;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void SweepConfig::validate() const {
  if (files.empty()) {
    if (n < 2 || n > kMaxBruteForceSpins) throw CapacityError("generated instances need 2 <= n <= 24");
    if (count < 1) throw ValidationError("instance count must be positive");
  }
  if (triggers.empty()) throw ValidationError("at least one trigger is required");
  for (const auto& t : triggers) t.validate();
  if (t_anneals.empty()) throw ValidationError("at least one annealing time is required");
  for (double t : t_anneals) EvolutionConfig{t, tau, 0}.validate();
  if (spectrum && grid_points < 101) throw ValidationError("grid must have at least 101 points");
  if (k < 2 || k > kMaxLanczosPairs) throw ValidationError("k must be in 2..8");
  if (workers < 1) throw ValidationError("workers must be positive");
}

std::string SweepConfig::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSweepSchemaVersion;
  j["version"] = QANNEAL_VERSION;
  if (files.empty()) {
    j["source"] = {{"kind", "generate"}, {"n", n}, {"count", count}, {"seed", seed},
                   {"nonstoquastic", nonstoquastic}};
  } else {
    j["source"] = {{"kind", "files"}, {"paths", files}};
  }
  auto& trig = j["triggers"] = nlohmann::ordered_json::array();
  for (const auto& t : triggers) trig.push_back({{"kind", to_string(t.kind)}, {"g", trigger_g(t)}});
  j["t_anneals"] = t_anneals;
  j["tau"] = tau;
  j["spectrum"] = spectrum;
  j["grid_points"] = grid_points;
  j["k"] = k;
  return j.dump(2) + "\n";
}

std::vector<SweepInstance> sweep_instances(const SweepConfig& config) {
  std::vector<SweepInstance> out;
  if (!config.files.empty()) {
    for (const auto& f : config.files) {
      SweepInstance inst;
      inst.problem = resolve_instance(f);
      if (inst.problem.label.empty()) inst.problem.label = f;
      inst.truth = brute_force_solve(inst.problem);
      inst.seed = inst.problem.seed.value_or(0);
      out.push_back(std::move(inst));
    }
    return out;
  }
  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(i));
    GeneratedInstance g = generate_2sat_instance(config.n, seed);
    SweepInstance inst;
    inst.problem = map_formula_to_problem(g.formula, config.nonstoquastic);
    inst.problem.label = "n" + std::to_string(config.n) + "-s" + std::to_string(config.seed) + "-" + std::to_string(i);
    inst.problem.seed = seed;
    inst.truth = std::move(g.truth);
    inst.seed = seed;
    out.push_back(std::move(inst));
  }
  return out;
}

std::string sweep_csv_header() {
  return "schema,instance,instance_index,instance_seed,n,trigger,g,t_anneal,tau,steps,grid_points,"
         "p,delta_min,s_min,n_anticrossings,stretch_width,wall_time,status,version";
}

std::string to_csv(const SweepRow& r) {
  std::ostringstream o;
  char wall[32];
  std::snprintf(wall, sizeof wall, "%.3f", r.wall_time);
  o << r.schema << ',' << clean(r.instance) << ',' << r.instance_index << ',' << r.instance_seed << ','
    << r.n << ',' << to_string(r.trigger) << ',' << format_number(r.g) << ','
    << format_number(r.t_anneal) << ',' << format_number(r.tau) << ',' << r.steps << ','
    << r.grid_points << ',' << format_number(r.p) << ',' << format_number(r.delta_min) << ','
    << format_number(r.s_min) << ',' << r.n_anticrossings << ',' << format_number(r.stretch_width)
    << ',' << wall << ',' << clean(r.status) << ',' << r.version;
  return o.str();
}

SweepRow parse_sweep_row(const std::string& line) {
  const auto c = split_csv(line);
  if (c.size() != 19) throw ValidationError("sweep row has " + std::to_string(c.size()) + " columns, expected 19");
  try {
    SweepRow r;
    r.schema = std::stoi(c[0]);
    if (r.schema != kSweepSchemaVersion) throw ValidationError("unsupported sweep schema " + c[0]);
    r.instance = c[1];
    r.instance_index = std::stoi(c[2]);
    r.instance_seed = std::stoull(c[3]);
    r.n = std::stoi(c[4]);
    r.trigger = parse_trigger_kind(c[5]);
    r.g = std::stod(c[6]);
    r.t_anneal = std::stod(c[7]);
    r.tau = std::stod(c[8]);
    r.steps = std::stoll(c[9]);
    r.grid_points = std::stoi(c[10]);
    r.p = std::stod(c[11]);
    r.delta_min = std::stod(c[12]);
    r.s_min = std::stod(c[13]);
    r.n_anticrossings = std::stoi(c[14]);
    r.stretch_width = std::stod(c[15]);
    r.wall_time = std::stod(c[16]);
    r.status = c[17];
    r.version = c[18];
    return r;
  } catch (const std::logic_error& e) {
    throw ValidationError(std::string("malformed sweep row: ") + e.what());
  }
}

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::vector<SweepRow> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    if (number == 1) {
      if (line != sweep_csv_header()) throw ParseError(1, "unexpected sweep header");
      continue;
    }
    try {
      rows.push_back(parse_sweep_row(line));
    } catch (const ValidationError& e) {
      throw ParseError(number, e.what());
    }
  }
  return rows;
}

namespace {

struct Task {
  std::size_t instance;
  std::size_t trigger;
  std::vector<double> t_anneals;  // those still missing
};

std::vector<SweepRow> run_task(const SweepConfig& cfg, const SweepInstance& inst, std::size_t index,
                               const TriggerSpec& trigger, const std::vector<double>& t_anneals) {
  auto base = [&] {
    SweepRow r;
    r.instance = inst.problem.label;
    r.instance_index = static_cast<int>(index);
    r.instance_seed = inst.seed;
    r.n = inst.problem.n;
    r.trigger = trigger.kind;
    r.g = trigger_g(trigger);
    r.tau = cfg.tau;
    r.grid_points = cfg.spectrum ? cfg.grid_points : 0;
    return r;
  };
  std::vector<SweepRow> rows;
  std::optional<GapProfile> profile;
  std::string spectrum_error;
  if (cfg.spectrum) {
    try {
      GapProfileOptions o;
      o.grid_points = cfg.grid_points;
      o.k = cfg.k;
      o.seed = derive_seed(inst.seed, 0x5350ull);
      profile = gap_profile(inst.problem, trigger, o);
    } catch (const Error& e) {
      spectrum_error = std::string("spectrum: ") + e.what();
    }
  }
  for (double t : t_anneals) {
    SweepRow r = base();
    r.t_anneal = t;
    if (profile) {
      r.delta_min = profile->delta_min;
      r.s_min = profile->s_min;
      r.n_anticrossings = static_cast<int>(profile->anticrossings.size());
      r.stretch_width = profile->stretch_width;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      EvolutionConfig ec;
      ec.t_anneal = t;
      ec.tau = cfg.tau;
      const AnnealResult res = evolve(inst.problem, trigger, ec, &inst.truth);
      r.p = res.success_probability;
      r.tau = res.plan.tau;
      r.steps = res.plan.steps;
      if (!spectrum_error.empty()) r.status = "error: " + spectrum_error;
    } catch (const Error& e) {
      r.status = std::string("error: ") + e.what();
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(r));
  }
  return rows;
}

// Runs tasks on a worker pool and hands results to `sink` in task order.
void execute(const SweepConfig& cfg, const std::vector<SweepInstance>& instances,
             const std::vector<Task>& tasks, const std::function<void(std::vector<SweepRow>&)>& sink) {
  std::vector<std::optional<std::vector<SweepRow>>> done(tasks.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& t = tasks[i];
      auto rows = run_task(cfg, instances[t.instance], t.instance, cfg.triggers[t.trigger], t.t_anneals);
      {
        std::lock_guard lock(mu);
        done[i] = std::move(rows);
      }
      cv.notify_all();
    }
  };
  const int nthreads = std::min<int>(cfg.workers, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < nthreads; ++w) pool.emplace_back(worker);
  if (nthreads <= 1) {
    worker();
  } else {
    pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::vector<SweepRow> rows;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done[i].has_value(); });
      rows = std::move(*done[i]);
      done[i].reset();
    }
    sink(rows);
  }
  for (auto& th : pool) th.join();
}

std::vector<Task> plan_tasks(const SweepConfig& cfg, const std::vector<SweepInstance>& instances,
                             const std::set<RowKey>& present, int& skipped) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t t = 0; t < cfg.triggers.size(); ++t) {
      Task task{i, t, {}};
      for (double ta : cfg.t_anneals) {
        const auto key = key_of(instances[i].problem.label, cfg.triggers[t].kind,
                                trigger_g(cfg.triggers[t]), ta);
        if (present.count(key)) {
          ++skipped;
        } else {
          task.t_anneals.push_back(ta);
        }
      }
      if (!task.t_anneals.empty()) tasks.push_back(std::move(task));
    }
  }
  return tasks;
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepConfig& config) {
  config.validate();
  const auto instances = sweep_instances(config);
  int skipped = 0;
  const auto tasks = plan_tasks(config, instances, {}, skipped);
  std::vector<SweepRow> out;
  execute(config, instances, tasks, [&](std::vector<SweepRow>& rows) {
    for (auto& r : rows) out.push_back(std::move(r));
  });
  return out;
}

SweepSummary run_sweep(const SweepConfig& config, const SweepProgress& progress) {
  config.validate();
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);
  const fs::path sidecar = config.out_dir / "sweep_config.json";
  const std::string json = config.to_json();
  if (fs::exists(sidecar)) {
    std::ifstream in(sidecar);
    std::stringstream existing;
    existing << in.rdbuf();
    if (existing.str() != json) {
      throw ValidationError("existing sweep in " + config.out_dir.string() +
                            " was run with a different configuration");
    }
  } else {
    std::ofstream(sidecar) << json;
  }

  SweepSummary summary;
  summary.results = config.out_dir / "results.csv";
  std::set<RowKey> present;
  const bool fresh = !fs::exists(summary.results) || fs::file_size(summary.results) == 0;
  if (!fresh) {
    for (const auto& r : read_sweep_csv(summary.results)) {
      present.insert(key_of(r.instance, r.trigger, r.g, r.t_anneal));
    }
  }
  const auto instances = sweep_instances(config);
  const auto tasks = plan_tasks(config, instances, present, summary.rows_skipped);

  std::ofstream out(summary.results, std::ios::app);
  if (!out) throw ValidationError("cannot write " + summary.results.string());
  if (fresh) out << sweep_csv_header() << '\n' << std::flush;
  execute(config, instances, tasks, [&](std::vector<SweepRow>& rows) {
    for (const auto& r : rows) {
      out << to_csv(r) << '\n';
      ++summary.rows_written;
      if (!r.ok()) ++summary.rows_failed;
      if (progress) progress(r);
    }
    out.flush();
  });
  return summary;
}

std::vector<FitRow> run_fit(const std::vector<SweepRow>& rows, const FitFilter& filter, double max_rms) {
  std::map<std::tuple<std::string, double, double>, std::vector<LzPoint>> groups;
  std::map<std::tuple<std::string, double, double>, TriggerKind> kinds;
  for (const auto& r : rows) {
    if (!r.ok()) continue;
    if (filter.trigger && *filter.trigger != r.trigger) continue;
    if (filter.g && *filter.g != r.g) continue;
    if (filter.t_anneal && *filter.t_anneal != r.t_anneal) continue;
    const auto key = std::make_tuple(std::string(to_string(r.trigger)), r.g, r.t_anneal);
    kinds[key] = r.trigger;
    if (r.delta_min > 0.0) groups[key].push_back({r.delta_min, r.p});
  }
  std::vector<FitRow> out;
  for (const auto& [key, kind] : kinds) {
    FitRow f;
    f.trigger = kind;
    f.g = std::get<1>(key);
    f.t_anneal = std::get<2>(key);
    const auto& pts = groups[key];
    if (static_cast<int>(pts.size()) < kMinLzPoints) {
      f.skipped = true;
      f.fit.n_points = static_cast<int>(pts.size());
      f.notice = "skipped: " + std::to_string(pts.size()) + " points (need " + std::to_string(kMinLzPoints) + ")";
    } else {
      f.fit = lz_fit(pts);
      const double rms = std::sqrt(f.fit.residual / f.fit.n_points);
      f.reliable = f.fit.converged && rms <= max_rms;
      if (!f.fit.converged) {
        f.notice = "not converged: " + f.fit.diagnostics;
      } else if (!f.reliable) {
        f.notice = "unreliable: rms " + format_number(rms);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

void write_fit_csv(std::ostream& out, const std::vector<FitRow>& fits) {
  out << "trigger,g,t_anneal,n_points,a,b,residual,converged,reliable,notice\n";
  for (const auto& f : fits) {
    out << to_string(f.trigger) << ',' << format_number(f.g) << ',' << format_number(f.t_anneal) << ','
        << f.fit.n_points << ',';
    if (f.skipped) {
      out << ",,,";
    } else {
      out << format_number(f.fit.a) << ',' << format_number(f.fit.b) << ',' << format_number(f.fit.residual) << ',';
    }
    out << (f.fit.converged ? 1 : 0) << ',' << (f.reliable ? 1 : 0) << ',' << clean(f.notice) << '\n';
  }
}

}  // namespace qanneal
