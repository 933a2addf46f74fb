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

#pragma once

// Ensemble sweeps over (instance, trigger, T_A) with resumable CSV output,
// and Landau-Zener fits over the resulting tables.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qanneal/analysis.hpp"
#include "qanneal/problem.hpp"

namespace qanneal {

inline constexpr int kSweepSchemaVersion = 1;

/// "fixture:<label>" or a path to an instance file.
SpinProblem resolve_instance(const std::string& source);

/// "none", "ferro:<g>" or "antiferro:<g>".
TriggerSpec parse_trigger(const std::string& text);

struct SweepInstance {
  SpinProblem problem;
  GroundTruth truth;
  std::uint64_t seed = 0;  // 0 for file instances
};

struct SweepConfig {
  // Generated ensemble (used when `files` is empty).
  int n = 10;
  int count = 10;
  std::uint64_t seed = 1;
  bool nonstoquastic = false;
  std::vector<std::string> files;

  std::vector<TriggerSpec> triggers = {TriggerSpec{}};
  std::vector<double> t_anneals = {10.0, 100.0, 1000.0};
  double tau = 0.01;
  int grid_points = 1001;
  int k = 3;
  bool spectrum = true;
  std::filesystem::path out_dir = "sweep";
  int workers = 1;

  void validate() const;
  std::string to_json() const;
};

/// Materializes the instance list of a sweep (deterministic).
std::vector<SweepInstance> sweep_instances(const SweepConfig& config);

struct SweepRow {
  int schema = kSweepSchemaVersion;
  std::string instance;
  int instance_index = 0;
  std::uint64_t instance_seed = 0;
  int n = 0;
  TriggerKind trigger = TriggerKind::None;
  double g = 0.0;
  double t_anneal = 0.0;
  double tau = 0.0;
  std::int64_t steps = 0;
  int grid_points = 0;
  double p = 0.0;
  double delta_min = 0.0;
  double s_min = 0.0;
  int n_anticrossings = 0;
  double stretch_width = 0.0;
  double wall_time = 0.0;
  std::string status = "ok";
  std::string version = QANNEAL_VERSION;

  bool ok() const { return status == "ok"; }
};

std::string sweep_csv_header();
std::string to_csv(const SweepRow& row);
SweepRow parse_sweep_row(const std::string& line);
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path);

struct SweepSummary {
  int rows_written = 0;
  int rows_skipped = 0;  // already present
  int rows_failed = 0;
  std::filesystem::path results;
};

using SweepProgress = std::function<void(const SweepRow&)>;

/// Runs every (instance, trigger, T_A) combination not yet present in
/// out_dir/results.csv. Tasks are (instance, trigger) pairs executed by
/// `workers` threads; rows are appended by one writer in task order.
SweepSummary run_sweep(const SweepConfig& config, const SweepProgress& progress = {});

/// Same work as run_sweep, returned in memory without touching disk.
std::vector<SweepRow> compute_sweep(const SweepConfig& config);

struct FitFilter {
  std::optional<TriggerKind> trigger;
  std::optional<double> g;
  std::optional<double> t_anneal;
};

struct FitRow {
  TriggerKind trigger = TriggerKind::None;
  double g = 0.0;
  double t_anneal = 0.0;
  LzFitResult fit;
  bool skipped = false;
  bool reliable = false;
  std::string notice;
};

/// Groups ok rows by (trigger, g, T_A) and fits each group. Groups with
/// fewer than five points are returned with skipped = true. A converged fit
/// is flagged unreliable when its RMS error exceeds `max_rms`.
std::vector<FitRow> run_fit(const std::vector<SweepRow>& rows, const FitFilter& filter = {},
                            double max_rms = 0.1);

void write_fit_csv(std::ostream& out, const std::vector<FitRow>& fits);

}  // namespace qanneal
