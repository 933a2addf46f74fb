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

// Reference constructions written directly from Pauli algebra, kept apart
// from the library so that the operator, propagator and Lanczos code are
// checked against something they do not share code with.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qanneal/problem.hpp"
#include "qanneal/state.hpp"

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline Eigen::Matrix2cd sigma(char c) {
  Eigen::Matrix2cd m;
  const cd i(0.0, 1.0);
  switch (c) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

// Operators `ops[k]` on 1-based spins `sites[k]`. Spin n is the leftmost
// tensor factor, so spin i lands on bit i-1 of the row index.
inline Mat product(int n, std::vector<std::pair<int, char>> factors) {
  Mat out = Mat::Identity(1, 1);
  for (int spin = n; spin >= 1; --spin) {
    char c = 'I';
    for (auto [site, op] : factors)
      if (site == spin) c = op;
    out = kron(out, sigma(c));
  }
  return out;
}

struct Parts {
  Mat hi, ht, hp;
  Mat at(double s) const { return (1.0 - s) * hi + s * (1.0 - s) * ht + s * hp; }
};

inline Parts build(const qanneal::SpinProblem& p, double trigger_strength) {
  const int n = p.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Parts out{Mat::Zero(dim, dim), Mat::Zero(dim, dim), Mat::Zero(dim, dim)};
  for (int i = 1; i <= n; ++i) {
    out.hi -= product(n, {{i, 'X'}});
    out.hp -= p.h_z[i - 1] * product(n, {{i, 'Z'}});
  }
  for (const auto& c : p.z_couplings) {
    out.hp -= c.value * product(n, {{c.i, 'Z'}, {c.j, 'Z'}});
    if (c.value == 0.0) continue;
    out.hp -= p.y_coupling_strength * product(n, {{c.i, 'Y'}, {c.j, 'Y'}});
    out.ht -= trigger_strength * product(n, {{c.i, 'X'}, {c.j, 'X'}});
  }
  return out;
}

inline Vec to_vec(const qanneal::StateVector& psi) {
  Vec v(static_cast<Eigen::Index>(psi.dim()));
  for (std::size_t k = 0; k < psi.dim(); ++k) v[static_cast<Eigen::Index>(k)] = psi.amplitudes[k];
  return v;
}

inline qanneal::StateVector from_vec(int n, const Vec& v) {
  qanneal::StateVector psi{n, std::vector<cd>(static_cast<std::size_t>(v.size()))};
  for (Eigen::Index k = 0; k < v.size(); ++k) psi.amplitudes[static_cast<std::size_t>(k)] = v[k];
  return psi;
}

inline Mat expm_hermitian(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXcd ph = (es.eigenvalues().cast<cd>() * cd(0.0, -t)).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Midpoint-frozen exact propagation of the uniform state.
inline Vec anneal(const Parts& parts, double t_anneal, std::int64_t steps) {
  const Eigen::Index dim = parts.hi.rows();
  Vec v = Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
  const double tau = t_anneal / static_cast<double>(steps);
  for (std::int64_t m = 0; m < steps; ++m) {
    const double s = (static_cast<double>(m) + 0.5) * tau / t_anneal;
    v = expm_hermitian(parts.at(s), tau) * v;
  }
  return v;
}

inline Eigen::VectorXd eigenvalues(const Mat& h) {
  return Eigen::SelfAdjointEigenSolver<Mat>(h, Eigen::EigenvaluesOnly).eigenvalues();
}

// Random integer-valued problem on n spins with a connected-ish pair set.
inline qanneal::SpinProblem random_problem(int n, std::uint64_t seed, double y = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(-2, 2);
  qanneal::SpinProblem p;
  p.n = n;
  for (int i = 0; i < n; ++i) p.h_z.push_back(val(rng));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (j == i + 1 || rng() % 3 == 0) {
        int v = val(rng);
        if (v == 0) v = 1;
        p.z_couplings.push_back({i, j, static_cast<double>(v)});
      }
  p.y_coupling_strength = y;
  return p;
}

inline qanneal::StateVector random_state(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  qanneal::StateVector psi{n, std::vector<cd>(std::size_t{1} << n)};
  for (auto& a : psi.amplitudes) a = cd(nd(rng), nd(rng));
  psi.normalize();
  return psi;
}

}  // namespace oracle
