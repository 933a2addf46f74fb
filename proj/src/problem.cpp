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

#include "qanneal/problem.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "qanneal/errors.hpp"
#include "qanneal/rng.hpp"

namespace qanneal {

namespace {

bool literal_true(std::uint64_t index, int var, bool negated) {
  const bool value = ((index >> (var - 1)) & 1u) == 0;
  return value != negated;
}

void check_spin_index(int index, int n, const char* what) {
  if (index < 1 || index > n) {
    throw ValidationError(std::string(what) + " index " + std::to_string(index) +
                          " outside [1, " + std::to_string(n) + "]");
  }
}

constexpr double kEnergyTolerance = 1e-9;

}  // namespace

void Clause::validate(int n_vars) const {
  check_spin_index(var_a, n_vars, "clause variable");
  check_spin_index(var_b, n_vars, "clause variable");
  if (var_a == var_b) throw ValidationError("clause uses the same variable twice");
}

bool Clause::satisfied(std::uint64_t index) const {
  return literal_true(index, var_a, neg_a) || literal_true(index, var_b, neg_b);
}

bool same_clause(const Clause& x, const Clause& y) {
  if (x == y) return true;
  return x.var_a == y.var_b && x.neg_a == y.neg_b && x.var_b == y.var_a && x.neg_b == y.neg_a;
}

void SatFormula::validate() const {
  if (n_vars <= 0) throw ValidationError("formula needs at least one variable");
  for (const auto& c : clauses) c.validate(n_vars);
}

int SatFormula::violated_count(std::uint64_t index) const {
  int count = 0;
  for (const auto& c : clauses) count += c.satisfied(index) ? 0 : 1;
  return count;
}

void SpinProblem::validate() const {
  if (n <= 0) throw ValidationError("problem needs at least one spin");
  if (static_cast<int>(h_z.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " fields, got " +
                          std::to_string(h_z.size()));
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& c : z_couplings) {
    check_spin_index(c.i, n, "coupling");
    check_spin_index(c.j, n, "coupling");
    if (c.i >= c.j) {
      throw ValidationError("coupling (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                            ") must satisfy i < j");
    }
    if (!seen.insert({c.i, c.j}).second) {
      throw ValidationError("duplicate coupling (" + std::to_string(c.i) + ", " +
                            std::to_string(c.j) + ")");
    }
    if (!std::isfinite(c.value)) throw ValidationError("non-finite coupling value");
  }
  for (double h : h_z) {
    if (!std::isfinite(h)) throw ValidationError("non-finite field value");
  }
  if (!std::isfinite(y_coupling_strength)) throw ValidationError("non-finite y coupling");
}

double SpinProblem::diagonal_energy(std::uint64_t index) const {
  double e = 0.0;
  for (int i = 1; i <= n; ++i) e -= h_z[i - 1] * spin_value(index, i);
  for (const auto& c : z_couplings) e -= c.value * spin_value(index, c.i) * spin_value(index, c.j);
  return e;
}

std::vector<double> SpinProblem::diagonal_energies() const {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<double> out(dim);
  for (std::uint64_t k = 0; k < dim; ++k) out[k] = diagonal_energy(k);
  return out;
}

SpinProblem SpinProblem::with_y_couplings(double y) const {
  SpinProblem copy = *this;
  copy.y_coupling_strength = y;
  return copy;
}

const char* to_string(TriggerKind kind) {
  switch (kind) {
    case TriggerKind::None: return "none";
    case TriggerKind::Ferromagnetic: return "ferro";
    case TriggerKind::Antiferromagnetic: return "antiferro";
  }
  return "none";
}

TriggerKind parse_trigger_kind(const std::string& text) {
  if (text == "none" || text == "None" || text == "O") return TriggerKind::None;
  if (text == "ferro" || text == "ferromagnetic" || text == "F") return TriggerKind::Ferromagnetic;
  if (text == "antiferro" || text == "antiferromagnetic" || text == "A") {
    return TriggerKind::Antiferromagnetic;
  }
  throw ValidationError("unknown trigger kind '" + text + "'");
}

double TriggerSpec::coupling_sign() const {
  switch (kind) {
    case TriggerKind::None: return 0.0;
    case TriggerKind::Ferromagnetic: return 1.0;
    case TriggerKind::Antiferromagnetic: return -1.0;
  }
  return 0.0;
}

void TriggerSpec::validate() const {
  if (kind != TriggerKind::None && (!(g >= 0.0) || !std::isfinite(g))) {
    throw ValidationError("trigger strength g must be a nonnegative real");
  }
}

ClauseTerms map_clause_to_terms(const Clause& clause) {
  // c(s_a, s_b) = eps_a eps_b s_a s_b - (eps_a s_a + eps_b s_b) + 1, matched to
  // -h_a s_a - h_b s_b - J s_a s_b + 1.
  const double eps_a = clause.neg_a ? -1.0 : 1.0;
  const double eps_b = clause.neg_b ? -1.0 : 1.0;
  ClauseTerms terms;
  terms.fields = {std::pair{clause.var_a, eps_a}, std::pair{clause.var_b, eps_b}};
  terms.coupling = {std::min(clause.var_a, clause.var_b), std::max(clause.var_a, clause.var_b),
                    -eps_a * eps_b};
  return terms;
}

SpinProblem map_formula_to_problem(const SatFormula& formula, bool nonstoquastic) {
  formula.validate();
  SpinProblem problem;
  problem.n = formula.n_vars;
  problem.h_z.assign(formula.n_vars, 0.0);
  std::map<std::pair<int, int>, double> couplings;
  for (const auto& clause : formula.clauses) {
    const ClauseTerms t = map_clause_to_terms(clause);
    for (const auto& [index, value] : t.fields) problem.h_z[index - 1] += value;
    couplings[{t.coupling.i, t.coupling.j}] += t.coupling.value;
  }
  for (const auto& [pair, value] : couplings) {
    problem.z_couplings.push_back({pair.first, pair.second, value});
  }
  problem.y_coupling_strength = nonstoquastic ? 0.5 : 0.0;
  return problem;
}

GroundTruth brute_force_solve(const SpinProblem& problem) {
  problem.validate();
  if (problem.n > kMaxBruteForceSpins) {
    throw CapacityError("brute force search supports at most " +
                        std::to_string(kMaxBruteForceSpins) + " spins, got " +
                        std::to_string(problem.n));
  }
  const std::uint64_t dim = std::uint64_t{1} << problem.n;
  const double inf = std::numeric_limits<double>::infinity();
  GroundTruth truth;
  truth.energy = inf;
  truth.first_excited_energy = inf;
  std::uint64_t first_ground = 0;
  for (std::uint64_t k = 0; k < dim; ++k) {
    const double e = problem.diagonal_energy(k);
    if (e < truth.energy - kEnergyTolerance) {
      truth.first_excited_energy = truth.energy;
      truth.first_excited_degeneracy = truth.degeneracy;
      truth.energy = e;
      truth.degeneracy = 1;
      first_ground = k;
    } else if (e <= truth.energy + kEnergyTolerance) {
      ++truth.degeneracy;
    } else if (e < truth.first_excited_energy - kEnergyTolerance) {
      truth.first_excited_energy = e;
      truth.first_excited_degeneracy = 1;
    } else if (e <= truth.first_excited_energy + kEnergyTolerance) {
      ++truth.first_excited_degeneracy;
    }
  }
  // Second pass collects the ground-state indices once the minimum is known.
  for (std::uint64_t k = first_ground; k < dim; ++k) {
    if (truth.ground_indices.size() >= GroundTruth::kMaxStoredGroundStates) break;
    if (std::abs(problem.diagonal_energy(k) - truth.energy) <= kEnergyTolerance) {
      truth.ground_indices.push_back(k);
    }
  }
  truth.bitstring.resize(problem.n);
  for (int i = 1; i <= problem.n; ++i) truth.bitstring[i - 1] = spin_value(first_ground, i);
  if (truth.first_excited_degeneracy == 0) {
    // Fully degenerate spectrum: there is no excited level.
    truth.first_excited_energy = truth.energy;
  }
  return truth;
}

std::uint64_t count_satisfying(const SatFormula& formula, std::uint64_t limit) {
  formula.validate();
  if (formula.n_vars > kMaxBruteForceSpins) {
    throw CapacityError("satisfiability count supports at most " +
                        std::to_string(kMaxBruteForceSpins) + " variables");
  }
  // Bit-sliced: one 64-bit word holds 64 consecutive assignments. Variables
  // 1..6 vary inside the word (fixed lane patterns), the rest are constant.
  static constexpr std::uint64_t kLane[6] = {0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull,
                                             0xF0F0F0F0F0F0F0F0ull, 0xFF00FF00FF00FF00ull,
                                             0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const int n = formula.n_vars;
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t valid = dim >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
  // Word of lanes where variable v (1-based) has bit value 1, i.e. is false.
  auto bit_word = [&](int v, std::uint64_t block) -> std::uint64_t {
    if (v <= 6) return kLane[v - 1];
    return ((block >> (v - 1)) & 1u) ? ~std::uint64_t{0} : 0;
  };
  std::uint64_t count = 0;
  for (std::uint64_t block = 0; block < dim; block += 64) {
    std::uint64_t violated = 0;
    for (const auto& c : formula.clauses) {
      const std::uint64_t wa = bit_word(c.var_a, block);
      const std::uint64_t wb = bit_word(c.var_b, block);
      // literal x false <=> bit 1; literal !x false <=> bit 0.
      violated |= (c.neg_a ? ~wa : wa) & (c.neg_b ? ~wb : wb);
      if ((violated & valid) == valid) break;
    }
    count += static_cast<std::uint64_t>(std::popcount(~violated & valid));
    if (count >= limit) return limit;
  }
  return count;
}

GeneratedInstance generate_2sat_instance(int n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("instance generation needs n >= 2");
  if (n > kMaxBruteForceSpins) {
    throw CapacityError("instance generation supports at most " +
                        std::to_string(kMaxBruteForceSpins) + " variables, got " +
                        std::to_string(n));
  }
  constexpr std::uint64_t kMaxAttempts = 1'000'000;
  Rng rng(seed);
  const int m = n + 1;
  for (std::uint64_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    SatFormula formula{n, {}};
    formula.clauses.reserve(m);
    while (static_cast<int>(formula.clauses.size()) < m) {
      const int a = static_cast<int>(uniform_below(rng, n)) + 1;
      int b = static_cast<int>(uniform_below(rng, n - 1)) + 1;
      if (b >= a) ++b;
      const std::uint64_t pattern = uniform_below(rng, 4);
      Clause c{std::min(a, b), false, std::max(a, b), false};
      c.neg_a = (pattern & 1u) != 0;
      c.neg_b = (pattern & 2u) != 0;
      const bool duplicate = std::any_of(formula.clauses.begin(), formula.clauses.end(),
                                         [&](const Clause& o) { return same_clause(o, c); });
      if (!duplicate) formula.clauses.push_back(c);
    }
    // A variable missing from every clause is free, so the count cannot be 1.
    std::uint64_t seen = 0;
    for (const auto& c : formula.clauses) seen |= (std::uint64_t{1} << (c.var_a - 1)) | (std::uint64_t{1} << (c.var_b - 1));
    if (seen != (std::uint64_t{1} << n) - 1) continue;
    if (count_satisfying(formula, 2) != 1) continue;
    GeneratedInstance out;
    out.truth = brute_force_solve(map_formula_to_problem(formula));
    out.formula = std::move(formula);
    out.attempts = attempt;
    return out;
  }
  throw Error("instance generation exceeded " + std::to_string(kMaxAttempts) + " attempts");
}

namespace {

void check_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw ValidationError("permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    check_spin_index(p, n, "permutation");
    if (hit[p - 1]) throw ValidationError("permutation repeats an index");
    hit[p - 1] = true;
  }
}

}  // namespace

SatFormula relabel(const SatFormula& formula, const std::vector<int>& perm) {
  check_permutation(perm, formula.n_vars);
  SatFormula out = formula;
  for (auto& c : out.clauses) {
    c.var_a = perm[c.var_a - 1];
    c.var_b = perm[c.var_b - 1];
  }
  return out;
}

SpinProblem relabel(const SpinProblem& problem, const std::vector<int>& perm) {
  check_permutation(perm, problem.n);
  SpinProblem out = problem;
  for (int i = 1; i <= problem.n; ++i) out.h_z[perm[i - 1] - 1] = problem.h_z[i - 1];
  for (auto& c : out.z_couplings) {
    const int a = perm[c.i - 1];
    const int b = perm[c.j - 1];
    c.i = std::min(a, b);
    c.j = std::max(a, b);
  }
  std::sort(out.z_couplings.begin(), out.z_couplings.end(),
            [](const Coupling& x, const Coupling& y) { return std::pair{x.i, x.j} < std::pair{y.i, y.j}; });
  return out;
}

}  // namespace qanneal
