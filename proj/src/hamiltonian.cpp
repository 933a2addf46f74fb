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

#include "qanneal/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qanneal/errors.hpp"

namespace qanneal {

ScheduleCoefficients schedule_coeffs(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("annealing parameter s = " + std::to_string(s) + " outside [0, 1]");
  }
  return {1.0 - s, s, s * (1.0 - s)};
}

OperatorTerms OperatorTerms::build(const SpinProblem& problem, const TriggerSpec& trigger) {
  problem.validate();
  trigger.validate();
  if (problem.n > kMaxStateSpins) {
    throw CapacityError("operator supports at most " + std::to_string(kMaxStateSpins) + " spins");
  }
  OperatorTerms terms;
  terms.n = problem.n;
  terms.diag_energy = problem.diagonal_energies();
  terms.x_field.assign(problem.n, 1.0);

  std::vector<Coupling> graph;
  for (const auto& c : problem.z_couplings) {
    if (c.value != 0.0) graph.push_back(c);
  }
  std::sort(graph.begin(), graph.end(), [](const Coupling& x, const Coupling& y) {
    return std::pair{x.i, x.j} < std::pair{y.i, y.j};
  });
  const double xx = trigger.strength();
  if (xx != 0.0) {
    for (const auto& c : graph) terms.xx_pairs.push_back({c.i, c.j, xx});
  }
  if (problem.y_coupling_strength != 0.0) {
    for (const auto& c : graph) terms.yy_pairs.push_back({c.i, c.j, problem.y_coupling_strength});
  }
  return terms;
}

double OperatorTerms::derivative_norm_bound() const {
  double bound = 0.0;
  for (double h : x_field) bound += std::abs(h);
  for (const auto& p : xx_pairs) bound += std::abs(p.strength);
  for (const auto& p : yy_pairs) bound += std::abs(p.strength);
  double diag_max = 0.0;
  for (double d : diag_energy) diag_max = std::max(diag_max, std::abs(d));
  return bound + diag_max;
}

template <class T>
void apply_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                       std::span<const T> in, std::span<T> out) {
  const std::uint64_t dim = terms.dim();
  if (in.size() != dim || out.size() != dim) {
    throw ValidationError("state dimension " + std::to_string(in.size()) +
                          " does not match operator dimension " + std::to_string(dim));
  }
  const double b = coeffs.b_prob;
  for (std::uint64_t k = 0; k < dim; ++k) out[k] = (b * terms.diag_energy[k]) * in[k];

  if (coeffs.a_init != 0.0) {
    for (int i = 0; i < terms.n; ++i) {
      const double w = -coeffs.a_init * terms.x_field[i];
      if (w == 0.0) continue;
      const std::uint64_t bit = std::uint64_t{1} << i;
      for (std::uint64_t k = 0; k < dim; ++k) out[k] += w * in[k ^ bit];
    }
  }
  if (coeffs.c_trig != 0.0) {
    for (const auto& p : terms.xx_pairs) {
      const double w = -coeffs.c_trig * p.strength;
      const std::uint64_t m = p.mask();
      for (std::uint64_t k = 0; k < dim; ++k) out[k] += w * in[k ^ m];
    }
  }
  if (b != 0.0) {
    for (const auto& p : terms.yy_pairs) {
      // sy sy flips both bits: -1 when the bits agree, +1 when they differ.
      const double w = -b * p.strength;
      const std::uint64_t m = p.mask();
      const std::uint64_t bi = std::uint64_t{1} << (p.i - 1);
      const std::uint64_t bj = std::uint64_t{1} << (p.j - 1);
      for (std::uint64_t k = 0; k < dim; ++k) {
        const bool equal = ((k & bi) != 0) == ((k & bj) != 0);
        out[k] += (equal ? -w : w) * in[k ^ m];
      }
    }
  }
}

template void apply_hamiltonian<double>(const OperatorTerms&, const ScheduleCoefficients&,
                                        std::span<const double>, std::span<double>);
template void apply_hamiltonian<Complex>(const OperatorTerms&, const ScheduleCoefficients&,
                                         std::span<const Complex>, std::span<Complex>);

StateVector apply_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                              const StateVector& psi) {
  StateVector out{psi.n, std::vector<Complex>(psi.amplitudes.size())};
  apply_hamiltonian<Complex>(terms, coeffs, psi.amplitudes, out.amplitudes);
  return out;
}

double expectation(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                   const StateVector& psi) {
  const StateVector h_psi = apply_hamiltonian(terms, coeffs, psi);
  return psi.inner(h_psi).real();
}

bool is_stoquastic(const OperatorTerms& terms, const ScheduleCoefficients& coeffs) {
  for (double h : terms.x_field) {
    if (-coeffs.a_init * h > 0.0) return false;
  }
  // xx and yy terms on the same pair share matrix positions; combine them.
  std::map<std::uint64_t, std::pair<double, double>> pairs;
  for (const auto& p : terms.xx_pairs) pairs[p.mask()].first += -coeffs.c_trig * p.strength;
  for (const auto& p : terms.yy_pairs) pairs[p.mask()].second += -coeffs.b_prob * p.strength;
  for (const auto& [mask, w] : pairs) {
    const auto [wx, wy] = w;
    if (wx - wy > 0.0) return false;  // bits equal
    if (wx + wy > 0.0) return false;  // bits differ
  }
  return true;
}

}  // namespace qanneal
