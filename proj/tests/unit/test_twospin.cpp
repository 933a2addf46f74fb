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
#include <cmath>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qanneal/errors.hpp"
#include "qanneal/twospin.hpp"

using namespace qanneal;

namespace {

std::array<double, 4> sorted(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Dense two-spin Hamiltonian written from scratch.
Eigen::VectorXd oracle_spectrum(const TwoSpinParams& p) {
  using oracle::product;
  const oracle::Mat hi = -p.hx * (product(2, {{1, 'X'}}) + product(2, {{2, 'X'}}));
  const oracle::Mat ht = p.trigger_sign * p.g * (p.jx * product(2, {{1, 'X'}, {2, 'X'}}) + p.jy * product(2, {{1, 'Y'}, {2, 'Y'}}));
  const oracle::Mat hp = -p.jz * product(2, {{1, 'Z'}, {2, 'Z'}});
  return oracle::eigenvalues((1 - p.s) * hi + p.s * (1 - p.s) * ht + p.s * hp);
}

}  // namespace

TEST(TwoSpinNumeric, MatchesOracle) {
  for (double g : {0.0, 1.0, 3.0})
    for (double jx : {-1.0, 1.0})
      for (double jy : {-1.0, 0.0, 1.0})
        for (double s : {0.0, 0.3, 0.8}) {
          TwoSpinParams p{g, jx, jy, 1.0, s};
          const auto got = twospin_spectrum_numeric(p);
          const Eigen::VectorXd want = oracle_spectrum(p);
          for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[k], 1e-13);
        }
}

TEST(TwoSpinNumeric, Endpoints) {
  const auto a = twospin_spectrum_numeric({1.0, 1.0, 1.0, 1.0, 0.0});
  const std::array<double, 4> e0 = {-2, 0, 0, 2};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(a[k], e0[k], 1e-13);
  const auto b = twospin_spectrum_numeric({2.0, -1.0, 1.0, 1.0, 1.0});
  const std::array<double, 4> e1 = {-1, -1, 1, 1};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(b[k], e1[k], 1e-13);
}

TEST(TwoSpinNumeric, AntiferroTriggerCreatesCrossings) {
  // Lowest two levels meet in the interior and separate again.
  int touches = 0;
  double prev = 1.0;
  for (int i = 1; i < 2000; ++i) {
    TwoSpinParams p{3.0, -1.0, -1.0, 1.0, i / 2000.0};
    const auto e = twospin_spectrum_numeric(p);
    const double gap = e[1] - e[0];
    if (gap < 1e-3 && prev >= 1e-3) ++touches;
    prev = gap;
  }
  EXPECT_GE(touches, 1);
}

TEST(TwoSpinClosedForm, AgreesAtEndOfAnneal) {
  for (double g : {0.0, 0.5, 2.0, 4.0})
    for (double jx : {-1.0, 0.5, 1.0})
      for (double jy : {-1.0, 0.0, 1.0})
        for (double jz : {0.5, 1.0, 2.0}) {
          TwoSpinParams p{g, jx, jy, jz, 1.0};
          const auto closed = sorted(twospin_eigenvalues_closed_form(p));
          const auto num = twospin_spectrum_numeric(p);
          for (int k = 0; k < 4; ++k) EXPECT_NEAR(closed[k], num[k], 1e-12);
        }
}

TEST(TwoSpinClosedForm, StartDiscrepancyPinned) {
  const TwoSpinParams p{1.0, 1.0, 1.0, 1.0, 0.0};
  const auto closed = sorted(twospin_eigenvalues_closed_form(p));
  EXPECT_NEAR(closed[0], -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(closed[1], 0.0, 1e-14);
  EXPECT_NEAR(closed[2], 0.0, 1e-14);
  EXPECT_NEAR(closed[3], std::sqrt(2.0), 1e-14);
  const auto num = twospin_spectrum_numeric(p);
  EXPECT_NEAR(num[0], -2.0, 1e-13);
  EXPECT_NEAR(num[3], 2.0, 1e-13);
}

TEST(TwoSpinClosedForm, DirectSubstitution) {
  const auto l = twospin_eigenvalues_closed_form({0.0, 0.0, 0.0, 1.0, 0.5});
  EXPECT_DOUBLE_EQ(l[1], -0.5);
  EXPECT_DOUBLE_EQ(l[2], 0.5);
}

// The closed form reproduces the spectrum for every s once h_x = 1/sqrt(2)
// and the trigger enters with the many-spin sign.
TEST(TwoSpinClosedForm, ReproducesScaledFieldSpectrum) {
  for (double g : {0.0, 1.0, 3.0})
    for (double jx : {-1.0, 1.0})
      for (double jy : {-1.0, 0.0, 1.0})
        for (double s : {0.1, 0.35, 0.6, 0.9}) {
          TwoSpinParams p{g, jx, jy, 1.0, s, -1.0, 1.0 / std::sqrt(2.0)};
          const auto closed = sorted(twospin_eigenvalues_closed_form(p));
          const auto num = twospin_spectrum_numeric(p);
          for (int k = 0; k < 4; ++k) EXPECT_NEAR(closed[k], num[k], 1e-12);
        }
}

// The radicand is (s(1-s) g J_y - s J_z)^2 + 2 (1-s)^2, so it never goes
// negative for real parameters; the guard in the library is defensive.
TEST(TwoSpinClosedForm, RadicandNonnegative) {
  for (double g : {0.0, 3.0, 10.0})
    for (double jy : {-2.0, 1.0})
      for (double s : {0.0, 0.5, 0.9, 1.0})
        EXPECT_NO_THROW(twospin_eigenvalues_closed_form({g, 1.0, jy, 1.0, s}));
  EXPECT_THROW(twospin_eigenvalues_closed_form({1.0, 1.0, 1.0, 1.0, 1.5}), DomainError);
}

TEST(TwoSpinGapFormula, Substitution) {
  const double s = 0.9;
  const TwoSpinGaps g = twospin_gap_leading_order({0.0, 1.0, 1.0, 2.0, s});
  EXPECT_DOUBLE_EQ(g.delta12, (1 - s) * (1 - s) / (s * 2.0));
  EXPECT_THROW(twospin_gap_leading_order({0.0, 1.0, 1.0, 0.0, s}), DomainError);
  EXPECT_THROW(twospin_gap_leading_order({0.0, 1.0, 1.0, 1.0, 0.0}), DomainError);
}

TEST(TwoSpinGapFormula, FerroCancellation) {
  const double s = 0.95;
  const TwoSpinGaps a = twospin_gap_leading_order({2.0, 1.0, 1.0, 1.0, s});
  const TwoSpinGaps b = twospin_gap_leading_order({0.0, 1.0, 1.0, 1.0, s});
  EXPECT_NEAR(a.delta12, b.delta12, 1e-15);
  EXPECT_NEAR(a.delta34 - b.delta34, 2 * (1 - s) * 2 * s * 2.0, 1e-14);
}

TEST(TwoSpinGapFormula, LinearVanishingWithTrigger) {
  const TwoSpinGaps a = twospin_gap_leading_order({1.0, 1.0, -1.0, 1.0, 0.999});
  const TwoSpinGaps b = twospin_gap_leading_order({1.0, 1.0, -1.0, 1.0, 0.9995});
  EXPECT_NEAR(a.delta12 / b.delta12, 2.0, 1e-2);
}

namespace {

// For J_z > 0 the lower pair descends from the ferromagnetic doublet, which
// is the pair Delta12 refers to.
TwoSpinGaps numeric_gaps(const TwoSpinParams& p) {
  const auto e = twospin_spectrum_numeric(p);
  return {e[1] - e[0], e[3] - e[2]};
}

}  // namespace

TEST(TwoSpinGapFormula, MatchesSpectrumWhereTriggerTermLeads) {
  for (double s : {0.99, 0.999}) {
    const double tol = s == 0.99 ? 0.05 : 0.01;
    for (double g : {0.5, 1.0, 2.0})
      for (double jx : {-1.0, 0.0, 1.0})
        for (double jy : {-1.0, 0.0, 1.0}) {
          const TwoSpinParams p{g, jx, jy, 1.0, s};
          const TwoSpinGaps lo = twospin_gap_leading_order(p);
          const TwoSpinGaps num = numeric_gaps(p);
          if (jx != jy) EXPECT_NEAR(num.delta12 / std::abs(lo.delta12), 1.0, tol) << g << jx << jy << s;
          if (jx != -jy) EXPECT_NEAR(num.delta34 / std::abs(lo.delta34), 1.0, tol) << g << jx << jy << s;
        }
  }
}

TEST(TwoSpinGapFormula, FieldNormalizationWithoutTrigger) {
  const double s = 0.999;
  const TwoSpinGaps lo = twospin_gap_leading_order({0.0, 0.0, 0.0, 1.0, s});
  // h_x = 1: the second-order splitting is twice the formula value.
  EXPECT_NEAR(numeric_gaps({0.0, 0.0, 0.0, 1.0, s}).delta12 / lo.delta12, 2.0, 1e-2);
  EXPECT_NEAR(numeric_gaps({0.0, 0.0, 0.0, 1.0, s, -1.0, 1.0 / std::sqrt(2.0)}).delta12 / lo.delta12, 1.0, 1e-2);
}
