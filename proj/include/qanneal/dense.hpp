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

// Dense reference matrices assembled from explicit Pauli tensor products.
// Used as validation oracles for the matrix-free operator and the product
// formula; limited to small systems.

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qanneal/hamiltonian.hpp"
#include "qanneal/problem.hpp"

namespace qanneal {

inline constexpr int kMaxDenseSpins = 10;

/// The three Hamiltonian pieces H_I, H_T and H_P as dense matrices.
struct DenseParts {
  Eigen::MatrixXcd initial;
  Eigen::MatrixXcd trigger;
  Eigen::MatrixXcd problem;

  Eigen::MatrixXcd at(const ScheduleCoefficients& coeffs) const {
    return coeffs.a_init * initial + coeffs.c_trig * trigger + coeffs.b_prob * problem;
  }
};

/// Pauli operator: 'I', 'X', 'Y' or 'Z'.
Eigen::Matrix2cd pauli(char which);

/// sigma^{a}_i sigma^{b}_j ... embedded in n spins; factors given as
/// (1-based spin, Pauli letter). Spin i acts on bit i - 1.
Eigen::MatrixXcd pauli_string(int n, const std::vector<std::pair<int, char>>& factors);

DenseParts dense_parts(const SpinProblem& problem, const TriggerSpec& trigger);

/// Dense H(s) rebuilt from operator terms (diagonal copied, pair terms from Pauli products).
Eigen::MatrixXcd dense_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs);

/// psi <- exp(-i tau h) psi through a Hermitian eigendecomposition of h.
void exact_step(const Eigen::MatrixXcd& h, double tau, StateVector& psi);

/// Element-wise check that every off-diagonal entry is real and <= tol.
bool is_stoquastic_dense(const Eigen::MatrixXcd& h, double tol = 1e-14);

}  // namespace qanneal
