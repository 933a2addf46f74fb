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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "qanneal/errors.hpp"
#include "qanneal/fixtures.hpp"
#include "qanneal/problem.hpp"

using namespace qanneal;

namespace {

// Truth of a literal straight from the convention: variable true <=> bit 0.
bool literal(std::uint64_t index, int var, bool neg) {
  const bool value = ((index >> (var - 1)) & 1u) == 0;
  return neg ? !value : value;
}

int violated(const SatFormula& f, std::uint64_t index) {
  int count = 0;
  for (const auto& c : f.clauses)
    if (!(literal(index, c.var_a, c.neg_a) || literal(index, c.var_b, c.neg_b))) ++count;
  return count;
}

double energy(const SpinProblem& p, std::uint64_t index) {
  auto z = [&](int i) { return ((index >> (i - 1)) & 1u) ? -1.0 : 1.0; };
  double e = 0.0;
  for (int i = 1; i <= p.n; ++i) e -= p.h_z[i - 1] * z(i);
  for (const auto& c : p.z_couplings) e -= c.value * z(c.i) * z(c.j);
  return e;
}

}  // namespace

TEST(ClauseMapping, PlainLiterals) {
  const ClauseTerms t = map_clause_to_terms({1, false, 2, false});
  EXPECT_EQ(t.fields[0], (std::pair<int, double>{1, 1.0}));
  EXPECT_EQ(t.fields[1], (std::pair<int, double>{2, 1.0}));
  EXPECT_EQ(t.coupling, (Coupling{1, 2, -1.0}));
}

TEST(ClauseMapping, BothNegated) {
  const ClauseTerms t = map_clause_to_terms({1, true, 2, true});
  EXPECT_EQ(t.fields[0].second, -1.0);
  EXPECT_EQ(t.fields[1].second, -1.0);
  EXPECT_EQ(t.coupling.value, -1.0);
}

TEST(ClauseMapping, MixedLiterals) {
  const ClauseTerms t = map_clause_to_terms({1, true, 2, false});
  EXPECT_EQ(t.fields[0].second, -1.0);
  EXPECT_EQ(t.fields[1].second, 1.0);
  EXPECT_EQ(t.coupling.value, 1.0);
}

TEST(ClauseMapping, ReversedIndicesStillSorted) {
  const ClauseTerms t = map_clause_to_terms({5, false, 2, true});
  EXPECT_EQ(t.coupling.i, 2);
  EXPECT_EQ(t.coupling.j, 5);
  EXPECT_EQ(t.coupling.value, 1.0);
}

TEST(ClauseMapping, SingleClauseCost) {
  SatFormula f{2, {{1, false, 2, false}}};
  const SpinProblem p = map_formula_to_problem(f);
  // (-1,-1): both bits set
  EXPECT_DOUBLE_EQ(p.diagonal_energy(0b11) + 1.0, 4.0);
  EXPECT_DOUBLE_EQ(p.diagonal_energy(0b00) + 1.0, 0.0);
}

TEST(ClauseMapping, InvalidClauseRejected) {
  SatFormula f{3, {{2, false, 2, true}}};
  EXPECT_THROW(map_formula_to_problem(f), ValidationError);
  SatFormula g{3, {{1, false, 4, true}}};
  EXPECT_THROW(map_formula_to_problem(g), ValidationError);
}

TEST(ClauseMapping, CostIdentityExhaustive) {
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const GeneratedInstance inst = generate_2sat_instance(n, seed * 1000 + n);
      const SatFormula& f = inst.formula;
      const SpinProblem p = map_formula_to_problem(f);
      const double m = static_cast<double>(f.clauses.size());
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
        ASSERT_DOUBLE_EQ(energy(p, k) + m, 4.0 * violated(f, k)) << "n=" << n << " k=" << k;
        ASSERT_DOUBLE_EQ(p.diagonal_energy(k), energy(p, k));
      }
    }
  }
}

TEST(ClauseMapping, SatisfyingAssignmentHasEnergyMinusM) {
  for (int n = 3; n <= 12; n += 3) {
    const GeneratedInstance inst = generate_2sat_instance(n, 77);
    const SpinProblem p = map_formula_to_problem(inst.formula);
    std::vector<std::uint64_t> sat;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k)
      if (violated(inst.formula, k) == 0) sat.push_back(k);
    ASSERT_EQ(sat.size(), 1u);
    EXPECT_DOUBLE_EQ(energy(p, sat[0]), -static_cast<double>(n + 1));
    EXPECT_EQ(inst.truth.ground_index(), sat[0]);
  }
}

TEST(ClauseMapping, NonstoquasticVariantAddsY) {
  const GeneratedInstance inst = generate_2sat_instance(6, 3);
  EXPECT_EQ(map_formula_to_problem(inst.formula, true).y_coupling_strength, 0.5);
  EXPECT_EQ(map_formula_to_problem(inst.formula, false).y_coupling_strength, 0.0);
}

TEST(ClauseMapping, PermutationEquivariance) {
  const GeneratedInstance inst = generate_2sat_instance(9, 5);
  std::vector<int> perm(9);
  std::iota(perm.begin(), perm.end(), 1);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const SpinProblem a = map_formula_to_problem(relabel(inst.formula, perm));
    const SpinProblem b = relabel(map_formula_to_problem(inst.formula), perm);
    EXPECT_EQ(a.h_z, b.h_z);
    EXPECT_EQ(a.z_couplings, b.z_couplings);
  }
}

// Table VIII lists one coupling per clause for 709 (13 = N + 1 pairs, all
// nonzero), so each clause's literal signs are fixed up to the two patterns
// compatible with J. Search those patterns for the field vector.
TEST(ClauseMapping, Fixture709HasA2SatSource) {
  const SpinProblem target = fixture_problem(709);
  ASSERT_EQ(target.z_couplings.size(), 13u);
  const auto& cs = target.z_couplings;
  int found = 0;
  SatFormula source;
  for (std::uint32_t mask = 0; mask < (1u << 13); ++mask) {
    SatFormula f{12, {}};
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const bool flip = (mask >> k) & 1u;
      // J = -eps_a eps_b with eps = +1 for a plain literal.
      const bool neg_a = flip;
      const bool neg_b = cs[k].value < 0 ? flip : !flip;
      f.clauses.push_back({cs[k].i, neg_a, cs[k].j, neg_b});
    }
    const SpinProblem p = map_formula_to_problem(f);
    if (p.h_z == target.h_z && p.z_couplings == target.z_couplings) {
      ++found;
      source = f;
    }
  }
  ASSERT_GE(found, 1);
  std::uint64_t sat = 0;
  for (std::uint64_t k = 0; k < 4096; ++k)
    if (violated(source, k) == 0) ++sat;
  EXPECT_EQ(sat, 1u);
}

TEST(BruteForce, SingleSpin) {
  SpinProblem p{1, {1.0}, {}, 0.0, "", {}};
  const GroundTruth t = brute_force_solve(p);
  EXPECT_EQ(t.bitstring, std::vector<int>{1});
  EXPECT_EQ(t.energy, -1.0);
  EXPECT_EQ(t.degeneracy, 1u);
  EXPECT_EQ(t.first_excited_energy, 1.0);
}

TEST(BruteForce, AllZeroIsFullyDegenerate) {
  SpinProblem p{7, std::vector<double>(7, 0.0), {{1, 2, 0.0}}, 0.0, "", {}};
  const GroundTruth t = brute_force_solve(p);
  EXPECT_EQ(t.degeneracy, 128u);
  EXPECT_EQ(t.energy, 0.0);
}

TEST(BruteForce, Fixture709UniqueGround) {
  const SpinProblem p = fixture_problem(709);
  double best = 1e300;
  std::vector<std::uint64_t> argmin;
  for (std::uint64_t k = 0; k < 4096; ++k) {
    const double e = energy(p, k);
    if (e < best - 1e-12) {
      best = e;
      argmin = {k};
    } else if (std::abs(e - best) < 1e-12) {
      argmin.push_back(k);
    }
  }
  const GroundTruth t = brute_force_solve(p);
  ASSERT_EQ(argmin.size(), 1u);
  EXPECT_EQ(t.degeneracy, 1u);
  EXPECT_EQ(t.energy, best);
  EXPECT_EQ(t.energy, -13.0);
  for (int i = 1; i <= 12; ++i) EXPECT_EQ(t.bitstring[i - 1], spin_value(argmin[0], i));
}

TEST(BruteForce, AllFixturesUnique) {
  for (int label : kFixtureLabels) {
    const GroundTruth t = brute_force_solve(fixture_problem(label));
    EXPECT_EQ(t.degeneracy, 1u) << label;
    EXPECT_EQ(t.energy, -13.0) << label;
    EXPECT_LT(t.energy, t.first_excited_energy);
  }
}

TEST(BruteForce, RefusesLargeProblems) {
  SpinProblem p{25, std::vector<double>(25, 0.0), {}, 0.0, "", {}};
  EXPECT_THROW(brute_force_solve(p), CapacityError);
}

TEST(Generator, Deterministic) {
  const auto a = generate_2sat_instance(12, 424242);
  const auto b = generate_2sat_instance(12, 424242);
  EXPECT_EQ(a.formula.clauses, b.formula.clauses);
  const auto c = generate_2sat_instance(12, 424243);
  EXPECT_NE(a.formula.clauses, c.formula.clauses);
}

TEST(Generator, ThresholdShapeAndUniqueness) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto inst = generate_2sat_instance(12, seed);
    ASSERT_EQ(inst.formula.clauses.size(), 13u);
    int sat = 0;
    for (std::uint64_t k = 0; k < 4096; ++k) sat += violated(inst.formula, k) == 0;
    EXPECT_EQ(sat, 1);
    EXPECT_EQ(inst.truth.degeneracy, 1u);
    for (std::size_t x = 0; x < inst.formula.clauses.size(); ++x)
      for (std::size_t y = x + 1; y < inst.formula.clauses.size(); ++y)
        EXPECT_FALSE(same_clause(inst.formula.clauses[x], inst.formula.clauses[y]));
  }
}

TEST(SatCount, MatchesEnumeration) {
  std::mt19937_64 rng(77);
  for (int n : {2, 3, 5, 6, 7, 9, 12}) {
    for (int rep = 0; rep < 30; ++rep) {
      SatFormula f{n, {}};
      const int m = 1 + static_cast<int>(rng() % (2 * n));
      for (int c = 0; c < m; ++c) {
        int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
        if (a == b) b = a % n + 1;
        f.clauses.push_back({a, (rng() & 1) != 0, b, (rng() & 1) != 0});
      }
      std::uint64_t want = 0;
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) want += violated(f, k) == 0;
      EXPECT_EQ(count_satisfying(f, ~std::uint64_t{0}), want) << n;
      EXPECT_EQ(count_satisfying(f, 2), std::min<std::uint64_t>(want, 2));
    }
  }
}

TEST(Generator, RangeChecks) {
  EXPECT_THROW(generate_2sat_instance(1, 1), ValidationError);
  EXPECT_THROW(generate_2sat_instance(25, 1), CapacityError);
}

// Observed property of the ensemble, not a constraint of the generator.
TEST(Generator, FirstExcitedMostlyDegenerate) {
  int degenerate = 0;
  const int total = 1000;
  for (int k = 0; k < total; ++k) {
    const auto inst = generate_2sat_instance(12, 9000 + static_cast<std::uint64_t>(k));
    degenerate += inst.truth.first_excited_degeneracy > 1;
  }
  RecordProperty("degenerate_fraction", std::to_string(degenerate / static_cast<double>(total)));
  EXPECT_GT(degenerate, total * 3 / 4);
}

TEST(Fixtures, MatchPublishedColumns) {
  // Transcribed independently of the fixture text.
  const std::map<int, std::vector<double>> fields = {
      {709, {0, 1, 0, 0, -1, 0, -4, -1, -1, -1, 1, 0}},
      {950, {1, 4, -1, 1, -1, -1, -1, -1, 1, 1, 2, 1}},
      {103, {-1, 1, -1, 1, -1, -1, -1, 0, 1, -1, 2, -1}},
      {99, {1, 1, -1, 0, 0, 1, 1, 0, -2, -1, 0, 0}},
  };
  const std::map<int, std::vector<Coupling>> couplings = {
      {709, {{1, 4, 1}, {1, 11, 1}, {2, 7, 1}, {3, 7, -1}, {3, 11, -1}, {4, 9, -1}, {5, 7, -1},
             {6, 7, -1}, {6, 10, 1}, {7, 8, -1}, {7, 12, 1}, {9, 11, 1}, {9, 12, -1}}},
      {950, {{1, 11, -1}, {2, 4, -1}, {2, 5, 1}, {2, 7, 1}, {2, 8, 1}, {2, 9, 1}, {2, 11, 1},
             {3, 11, 1}, {6, 9, 1}, {9, 12, -1}, {10, 11, -1}, {10, 12, 0}, {1, 2, 0}}},
      {103, {{1, 4, 1}, {1, 10, -1}, {1, 11, -1}, {2, 8, 1}, {3, 7, -1}, {3, 8, 1}, {3, 9, -1},
             {5, 11, 1}, {6, 11, 1}, {9, 11, 1}, {9, 12, 1}, {1, 2, 0}, {1, 3, 0}}},
      {99, {{1, 9, 1}, {2, 9, 1}, {3, 4, -1}, {4, 11, 1}, {5, 6, 1}, {5, 8, -1}, {7, 9, 1},
            {7, 10, 0}, {8, 12, 1}, {9, 10, 1}, {10, 11, 1}, {10, 12, -1}, {1, 2, 0}}},
  };
  auto key = [](const Coupling& c) { return std::tuple{c.i, c.j, c.value}; };
  for (int label : kFixtureLabels) {
    const SpinProblem p = fixture_problem(label);
    EXPECT_EQ(p.n, 12);
    EXPECT_EQ(p.h_z, fields.at(label)) << label;
    std::multiset<std::tuple<int, int, double>> got, want;
    for (const auto& c : p.z_couplings) got.insert(key(c));
    for (const auto& c : couplings.at(label)) want.insert(key(c));
    EXPECT_EQ(got, want) << label;
  }
  EXPECT_THROW(fixture_problem(1), ValidationError);
}

TEST(Trigger, KindsAndStrength) {
  EXPECT_EQ((TriggerSpec{TriggerKind::Ferromagnetic, 2.0}).strength(), 2.0);
  EXPECT_EQ((TriggerSpec{TriggerKind::Antiferromagnetic, 2.0}).strength(), -2.0);
  EXPECT_EQ((TriggerSpec{TriggerKind::None, 7.0}).strength(), 0.0);
  EXPECT_THROW((TriggerSpec{TriggerKind::Ferromagnetic, -1.0}).validate(), ValidationError);
  EXPECT_EQ(parse_trigger_kind("antiferro"), TriggerKind::Antiferromagnetic);
  EXPECT_THROW(parse_trigger_kind("sideways"), ValidationError);
}
