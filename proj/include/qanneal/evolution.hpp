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

// Time evolution under H(t/T_A) with the symmetric second-order product
// formula. Coefficients of each step are frozen at the step midpoint.

#include <cstdint>
#include <functional>
#include <vector>

#include "qanneal/hamiltonian.hpp"
#include "qanneal/problem.hpp"
#include "qanneal/state.hpp"

namespace qanneal {

struct EvolutionConfig {
  double t_anneal = 100.0;
  double tau = 0.01;
  int record_stride = 0;  // 0 disables recording

  void validate() const;
};

/// m = round(T_A / tau) steps of exactly T_A / m.
struct StepPlan {
  std::int64_t steps = 0;
  double tau = 0.0;
  bool adjusted = false;
};

StepPlan plan_steps(const EvolutionConfig& config);

/// Called with the step count, the annealing parameter and the current state.
using StepObserver = std::function<void(std::int64_t, double, const StateVector&)>;

StateVector init_uniform_state(int n);

struct TracePoint {
  std::int64_t step = 0;
  double s = 0.0;
  double norm = 0.0;
};

struct AnnealResult {
  StateVector final_state;
  double success_probability = 0.0;
  EvolutionConfig config;
  StepPlan plan;
  double final_norm = 0.0;
  std::vector<TracePoint> trace;  // filled when config.record_stride > 0
};

/// Applies the factors of H(s) exactly, one at a time, in canonical order.
class ProductFormulaPropagator {
 public:
  explicit ProductFormulaPropagator(const OperatorTerms& terms);

  /// One symmetric step: diag, x, xx, yy, then the same in reverse, each with tau / 2.
  void step(StateVector& psi, double s_mid, double tau) const;

  /// Integrates from t_begin to t_end (either direction) in `steps` equal
  /// steps with s = t / t_anneal. Adjacent diagonal half-steps are fused;
  /// the observer sees the state after every `record_stride` steps and at
  /// both ends.
  void propagate(StateVector& psi, double t_anneal, double t_begin, double t_end,
                 std::int64_t steps, int record_stride = 0,
                 const StepObserver& observer = {}) const;

  const OperatorTerms& terms() const { return terms_; }

 private:
  void apply_diagonal(StateVector& psi, double angle) const;
  void apply_offdiagonal(StateVector& psi, const ScheduleCoefficients& coeffs, double dt) const;
  void apply_x(StateVector& psi, double weight, double dt) const;
  void apply_xx(StateVector& psi, double weight, double dt) const;
  void apply_yy(StateVector& psi, double weight, double dt) const;

  OperatorTerms terms_;
  std::vector<double> levels_;        // distinct diagonal values
  std::vector<std::uint32_t> level_;  // level index per basis state, empty if unused
};

/// One product-formula step with coefficients at `s_mid`.
void trotter_step(StateVector& psi, const OperatorTerms& terms, double s_mid, double tau);

/// Squared overlap with the ground space of `truth` (summed when degenerate).
double success_probability(const StateVector& final_state, const GroundTruth& truth);

/// Full anneal from the uniform superposition. Solves the problem by brute
/// force when `truth` is null.
AnnealResult evolve(const SpinProblem& problem, const TriggerSpec& trigger,
                    const EvolutionConfig& config, const GroundTruth* truth = nullptr,
                    const StepObserver& observer = {});

/// Reference integrator: exponentiates the dense midpoint Hamiltonian of
/// each step by eigendecomposition. Small systems only.
AnnealResult exact_propagator_evolve(const SpinProblem& problem, const TriggerSpec& trigger,
                                     const EvolutionConfig& config,
                                     const GroundTruth* truth = nullptr);

inline constexpr int kMaxExactPropagatorSpins = 8;

}  // namespace qanneal
