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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace qanneal {

using Complex = std::complex<double>;

/// Largest spin count for which state vectors are allocated.
inline constexpr int kMaxStateSpins = 26;

/// Amplitudes over the 2^n computational basis states (basis convention in
/// problem.hpp).
struct StateVector {
  int n = 0;
  std::vector<Complex> amplitudes;

  std::uint64_t dim() const { return amplitudes.size(); }
  double norm() const;
  void normalize();
  Complex inner(const StateVector& other) const;  // <this|other>
  static StateVector basis(int n, std::uint64_t index);
};

inline double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return std::sqrt(sum);
}

inline void StateVector::normalize() {
  const double inv = 1.0 / norm();
  for (auto& a : amplitudes) a *= inv;
}

inline Complex StateVector::inner(const StateVector& other) const {
  Complex sum = 0.0;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) sum += std::conj(amplitudes[k]) * other.amplitudes[k];
  return sum;
}

inline StateVector StateVector::basis(int n, std::uint64_t index) {
  StateVector psi{n, std::vector<Complex>(std::size_t{1} << n, 0.0)};
  psi.amplitudes.at(index) = 1.0;
  return psi;
}

}  // namespace qanneal
