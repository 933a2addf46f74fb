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

#include "qanneal/twospin.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "qanneal/dense.hpp"
#include "qanneal/errors.hpp"

namespace qanneal {

void TwoSpinParams::validate() const {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s = " + std::to_string(s) + " outside [0, 1]");
  if (!std::isfinite(g) || !std::isfinite(jx) || !std::isfinite(jy) || !std::isfinite(jz) ||
      !std::isfinite(hx) || !std::isfinite(trigger_sign)) {
    throw ValidationError("two-spin parameters must be finite");
  }
}

std::array<double, 4> twospin_eigenvalues_closed_form(const TwoSpinParams& p) {
  p.validate();
  const double s = p.s, g = p.g, jx = p.jx, jy = p.jy, jz = p.jz;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double radicand = s4 * g * g * jy * jy - 2 * s3 * g * g * jy * jy + 2 * s3 * g * jy * jz +
                          s2 * g * g * jy * jy - 2 * s2 * g * jy * jz + s2 * jz * jz + 2 * s2 -
                          4 * s + 2;
  if (radicand < 0.0) throw DomainError("negative radicand " + std::to_string(radicand));
  const double r = std::sqrt(radicand);
  return {
      s2 * g * jx - s * g * jx - r,
      -s2 * g * jx + s2 * g * jy + s * g * jx - s * g * jy - s * jz,
      -s2 * g * jx - s2 * g * jy + s * g * jx + s * g * jy + s * jz,
      s2 * g * jx - s * g * jx + r,
  };
}

std::array<double, 4> twospin_spectrum_numeric(const TwoSpinParams& p) {
  p.validate();
  const double s = p.s;
  const Eigen::MatrixXcd hi = -p.hx * (pauli_string(2, {{1, 'X'}}) + pauli_string(2, {{2, 'X'}}));
  const Eigen::MatrixXcd ht = p.trigger_sign * p.g *
                              (p.jx * pauli_string(2, {{1, 'X'}, {2, 'X'}}) +
                               p.jy * pauli_string(2, {{1, 'Y'}, {2, 'Y'}}));
  const Eigen::MatrixXcd hp = -p.jz * pauli_string(2, {{1, 'Z'}, {2, 'Z'}});
  const Eigen::MatrixXcd h = (1 - s) * hi + s * (1 - s) * ht + s * hp;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  const auto& e = eig.eigenvalues();
  return {e[0], e[1], e[2], e[3]};
}

TwoSpinGaps twospin_gap_leading_order(const TwoSpinParams& p) {
  p.validate();
  if (p.jz == 0.0) throw DomainError("leading-order gaps need J_z != 0");
  if (p.s == 0.0) throw DomainError("leading-order gaps are undefined at s = 0");
  const double s = p.s, u = 1.0 - s;
  const double q = u / (2.0 * s * p.jz);
  return {2.0 * u * (q + s * p.g * p.jx - s * p.g * p.jy),
          2.0 * u * (-q + s * p.g * p.jx + s * p.g * p.jy)};
}

}  // namespace qanneal
