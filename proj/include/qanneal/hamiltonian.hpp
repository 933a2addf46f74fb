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

// Matrix-free annealing Hamiltonian
//
//   H(s) = (1 - s) H_I + s (1 - s) H_T + s H_P
//   H_I  = -sum_i h^x_i sx_i
//   H_T  = -sum_{(i,j)} g J^x sx_i sx_j
//   H_P  = diag(E_z) - sum_{(i,j)} y sy_i sy_j
//
// Pair terms live on the coupling graph of the problem; pairs whose listed
// J^z is zero are skipped. All off-diagonal matrix elements are real in the
// computational basis, so the operator acts on real and complex vectors.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qanneal/problem.hpp"
#include "qanneal/state.hpp"

namespace qanneal {

struct ScheduleCoefficients {
  double a_init = 1.0;  // 1 - s, multiplies H_I
  double b_prob = 0.0;  // s, multiplies H_P
  double c_trig = 0.0;  // s (1 - s), multiplies H_T
};

/// Linear schedule with the s(1-s) trigger envelope; DomainError outside [0, 1].
ScheduleCoefficients schedule_coeffs(double s);

struct PairTerm {
  int i = 1;  // 1-based, i < j
  int j = 2;
  double strength = 0.0;

  std::uint64_t mask() const { return (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1)); }
};

struct OperatorTerms {
  int n = 0;
  std::vector<double> diag_energy;  // z-part of H_P per basis state
  std::vector<double> x_field;      // h^x_i, all 1
  std::vector<PairTerm> xx_pairs;   // strength g * J^x
  std::vector<PairTerm> yy_pairs;   // strength y

  std::uint64_t dim() const { return diag_energy.size(); }

  /// Builds the terms; CapacityError above kMaxStateSpins.
  static OperatorTerms build(const SpinProblem& problem, const TriggerSpec& trigger);

  /// Upper bound on ||dH/ds|| in the operator 2-norm, valid for all s.
  double derivative_norm_bound() const;
};

/// out = H(s) in. Reentrant; `out` must not alias `in`.
template <class T>
void apply_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                       std::span<const T> in, std::span<T> out);

StateVector apply_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                              const StateVector& psi);

/// <psi|H(s)|psi>, real part (the imaginary part vanishes to round-off).
double expectation(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                   const StateVector& psi);

/// Structural stoquasticity test: every off-diagonal element real and <= 0.
bool is_stoquastic(const OperatorTerms& terms, const ScheduleCoefficients& coeffs);

}  // namespace qanneal
