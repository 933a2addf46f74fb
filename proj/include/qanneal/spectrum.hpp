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

// Low-lying spectrum of H(s) by block Lanczos, and gap profiles along s.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qanneal/hamiltonian.hpp"
#include "qanneal/problem.hpp"
#include "qanneal/state.hpp"

namespace qanneal {

inline constexpr int kMaxLanczosPairs = 8;

struct SpectrumSample {
  double s = 0.0;
  std::vector<double> energies;  // ascending
  std::optional<std::vector<StateVector>> eigenvectors;
  std::vector<double> residuals;  // ||H v - E v|| per pair

  double gap() const { return energies.at(1) - energies.at(0); }
};

struct LanczosOptions {
  int k = 3;
  std::uint64_t seed = 0;
  bool want_vectors = false;
  double tolerance = 1e-9;
  int max_basis = 48;      // Krylov columns kept before a restart
  int max_restarts = 200;
  /// Optional start vectors (e.g. eigenvectors of a neighbouring s). Random
  /// vectors are always added so no symmetry sector is missed.
  const std::vector<std::vector<double>>* warm_start = nullptr;
};

/// k lowest eigenpairs (with multiplicity). NumericalError when the residual
/// tolerance is not met within the restart cap; the error carries the best
/// residuals.
SpectrumSample lanczos_lowest(const OperatorTerms& terms, double s, const LanczosOptions& options);
SpectrumSample lanczos_lowest(const OperatorTerms& terms, double s, int k, std::uint64_t seed,
                              bool want_vectors = false);

/// Real eigenvectors as plain arrays; the operator is real symmetric.
std::vector<std::vector<double>> real_vectors(const SpectrumSample& sample);

struct Anticrossing {
  double s = 0.0;
  double delta = 0.0;
  double prominence = 0.0;
};

struct GapProfileOptions {
  int grid_points = 1001;
  bool refine = true;
  int k = 3;
  std::uint64_t seed = 1;
  double refine_resolution = 1e-4;
  int max_refined_minima = 16;
  double prominence_ratio = 0.1;
  int max_continuity_depth = 4;
};

struct GapProfile {
  std::vector<SpectrumSample> samples;  // sorted by s
  double delta_min = 0.0;
  double s_min = 0.0;
  std::vector<Anticrossing> anticrossings;
  double stretch_width = 0.0;
  int continuity_refinements = 0;  // midpoints inserted by the continuity check

  std::vector<double> s_values() const;
  std::vector<double> gaps() const;
};

GapProfile gap_profile(const SpinProblem& problem, const TriggerSpec& trigger,
                       const GapProfileOptions& options = {});

/// Prominence-filtered interior local minima of the gap curve.
std::vector<Anticrossing> find_anticrossings(const GapProfile& profile, double prominence_ratio = 0.1);
int count_anticrossings(const GapProfile& profile, double prominence_ratio = 0.1);

/// Width of the interval around s_min on which Delta <= 2 Delta_min,
/// with linear interpolation at the edges.
double stretch_width(const GapProfile& profile);

/// Plot table: s, E0..E_{k-1}, Delta.
void write_profile_table(std::ostream& out, const GapProfile& profile);

}  // namespace qanneal
