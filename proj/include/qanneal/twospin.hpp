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

// Two-spin model with h_z = 0 and an xx + yy trigger:
//
//   H(s) = -(1 - s) h_x (sx_1 + sx_2)
//          + sign s (1 - s) g (J_x sx_1 sx_2 + J_y sy_1 sy_2)
//          - s J_z sz_1 sz_2
//
// `trigger_sign` = -1 matches the many-spin trigger; +1 is the alternative
// sign convention of the 2-spin trigger definition.

#include <array>

namespace qanneal {

struct TwoSpinParams {
  double g = 0.0;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 1.0;
  double s = 0.0;
  double trigger_sign = -1.0;
  double hx = 1.0;  // numeric model only

  void validate() const;
};

/// Closed-form lambda_1..lambda_4, evaluated term by term (not sorted).
/// DomainError when the radicand is negative.
std::array<double, 4> twospin_eigenvalues_closed_form(const TwoSpinParams& p);

/// Ascending eigenvalues of the dense 4x4 Hamiltonian.
std::array<double, 4> twospin_spectrum_numeric(const TwoSpinParams& p);

struct TwoSpinGaps {
  double delta12 = 0.0;
  double delta34 = 0.0;
};

/// Published leading-order gaps near s = 1; DomainError for J_z = 0 or s = 0.
TwoSpinGaps twospin_gap_leading_order(const TwoSpinParams& p);

}  // namespace qanneal
