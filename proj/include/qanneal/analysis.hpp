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

// Landau-Zener fits and diagnostics traces along an anneal.

#include <string>
#include <utility>
#include <vector>

#include "qanneal/evolution.hpp"
#include "qanneal/problem.hpp"

namespace qanneal {

struct LzPoint {
  double delta = 0.0;
  double p = 0.0;
};

/// Fit of p = 1 - exp(-a Delta^b).
struct LzFitResult {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;  // sum of squared errors
  int n_points = 0;
  bool converged = false;
  int iterations = 0;
  std::string diagnostics;
};

inline constexpr int kMinLzPoints = 5;

/// Damped Gauss-Newton on (log a, b). ValidationError on fewer than five
/// points or out-of-range data; degenerate clouds return converged = false.
LzFitResult lz_fit(const std::vector<LzPoint>& points);

/// Model value for given parameters.
double lz_model(double a, double b, double delta);

struct OverlapTrace {
  std::vector<double> s;
  std::vector<std::vector<double>> overlaps;  // per sample, K entries
  std::vector<std::vector<double>> energies;  // per sample, instantaneous E_0..E_{K-1}
  std::vector<double> avg_energy;             // <psi|H(s)|psi>
  double success_probability = 0.0;
  double final_norm = 0.0;
};

/// Eigenpairs closer than this are treated as one cluster; the cluster's
/// summed overlap is reported at its lowest index and the rest get 0.
inline constexpr double kClusterGap = 1e-8;

/// Squared overlaps with the K lowest instantaneous eigenstates at every
/// recorded step (config.record_stride; 0 picks about 200 samples).
OverlapTrace overlap_trace(const SpinProblem& problem, const TriggerSpec& trigger,
                           const EvolutionConfig& config, int K = 3, std::uint64_t seed = 1);

std::vector<std::pair<double, double>> average_energy_trace(const SpinProblem& problem,
                                                            const TriggerSpec& trigger,
                                                            const EvolutionConfig& config);

}  // namespace qanneal
