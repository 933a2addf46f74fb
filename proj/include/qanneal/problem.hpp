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

// 2-SAT formulas, Ising problem Hamiltonians and the clause -> Ising mapping.
//
// Conventions shared by every module:
//   * spins are 1-based, spin i lives in bit (i - 1) of a basis index;
//   * bit value 0 encodes sigma^z = +1, bit value 1 encodes sigma^z = -1;
//   * a Boolean variable is true iff its spin is +1.
// With these choices every clause polynomial vanishes on satisfying
// assignments and equals 4 on the single violating assignment.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qanneal {

/// Largest spin count accepted by exhaustive enumeration.
inline constexpr int kMaxBruteForceSpins = 24;

/// Spin value (+1 / -1) of 1-based `spin` in basis state `index`.
inline int spin_value(std::uint64_t index, int spin) {
  return ((index >> (spin - 1)) & 1u) ? -1 : +1;
}

struct Clause {
  int var_a = 1;
  bool neg_a = false;
  int var_b = 2;
  bool neg_b = false;

  void validate(int n_vars) const;
  /// True if the clause holds in basis state `index`.
  bool satisfied(std::uint64_t index) const;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Equal up to the order of the two literals.
bool same_clause(const Clause& x, const Clause& y);

struct SatFormula {
  int n_vars = 0;
  std::vector<Clause> clauses;

  void validate() const;
  int violated_count(std::uint64_t index) const;
};

struct Coupling {
  int i = 1;
  int j = 2;
  double value = 0.0;
  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// H_P = -sum_i h_i sz_i - sum_{i<j} (J_ij sz_i sz_j + y sy_i sy_j),
/// with y = y_coupling_strength placed on every pair with nonzero J_ij.
struct SpinProblem {
  int n = 0;
  std::vector<double> h_z;
  std::vector<Coupling> z_couplings;
  double y_coupling_strength = 0.0;
  std::string label;
  std::optional<std::uint64_t> seed;

  void validate() const;
  bool is_nonstoquastic() const { return y_coupling_strength != 0.0; }
  /// Diagonal (z-part) energy of basis state `index`.
  double diagonal_energy(std::uint64_t index) const;
  /// All 2^n diagonal energies, indexed by basis state.
  std::vector<double> diagonal_energies() const;
  /// A copy with y-couplings of strength `y` on the coupling graph.
  SpinProblem with_y_couplings(double y) const;
};

enum class TriggerKind { None, Ferromagnetic, Antiferromagnetic };

const char* to_string(TriggerKind kind);
TriggerKind parse_trigger_kind(const std::string& text);

/// H_T = -g sum_{(i,j) in graph} J^x sx_i sx_j with J^x = +1 (ferro) or -1.
struct TriggerSpec {
  TriggerKind kind = TriggerKind::None;
  double g = 0.0;

  /// J^x for this kind; 0 when there is no trigger.
  double coupling_sign() const;
  /// Effective pair coefficient g * J^x (0 for None regardless of g).
  double strength() const { return kind == TriggerKind::None ? 0.0 : g * coupling_sign(); }
  void validate() const;
};

struct GroundTruth {
  std::vector<int> bitstring;  // +1 / -1 per spin, lowest ground index
  double energy = 0.0;
  std::uint64_t degeneracy = 0;
  double first_excited_energy = 0.0;
  std::uint64_t first_excited_degeneracy = 0;
  /// Basis indices of the ground states (truncated at kMaxStoredGroundStates).
  std::vector<std::uint64_t> ground_indices;

  static constexpr std::size_t kMaxStoredGroundStates = 1u << 16;

  std::uint64_t ground_index() const { return ground_indices.front(); }
};

struct ClauseTerms {
  std::array<std::pair<int, double>, 2> fields;
  Coupling coupling;
};

/// Contributions of one clause to (h, J); the +1 constant is dropped.
ClauseTerms map_clause_to_terms(const Clause& clause);

/// Sums clause contributions. Pairs touched by any clause are kept even when
/// their couplings cancel. `nonstoquastic` adds y-couplings of strength 0.5.
SpinProblem map_formula_to_problem(const SatFormula& formula, bool nonstoquastic = false);

/// Exhaustive search of the z-part of `problem` (y-couplings ignored).
GroundTruth brute_force_solve(const SpinProblem& problem);

/// Number of satisfying assignments, counting stops once `limit` is reached.
std::uint64_t count_satisfying(const SatFormula& formula, std::uint64_t limit);

struct GeneratedInstance {
  SatFormula formula;
  GroundTruth truth;
  std::uint64_t attempts = 0;
};

/// Random M = n + 1 clause formula with a unique satisfying assignment.
GeneratedInstance generate_2sat_instance(int n, std::uint64_t seed);

/// Spin-index relabeling: spin i becomes perm[i - 1] (1-based targets).
SatFormula relabel(const SatFormula& formula, const std::vector<int>& perm);
SpinProblem relabel(const SpinProblem& problem, const std::vector<int>& perm);

}  // namespace qanneal
