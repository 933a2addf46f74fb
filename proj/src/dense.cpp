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

#include "qanneal/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "qanneal/errors.hpp"

namespace qanneal {

namespace {

void check_dense_size(int n) {
  if (n < 1 || n > kMaxDenseSpins) {
    throw CapacityError("dense matrices support 1.." + std::to_string(kMaxDenseSpins) +
                        " spins, got " + std::to_string(n));
  }
}

}  // namespace

Eigen::Matrix2cd pauli(char which) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (which) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw ValidationError(std::string("unknown Pauli operator '") + which + "'");
  }
  return m;
}

Eigen::MatrixXcd pauli_string(int n, const std::vector<std::pair<int, char>>& factors) {
  check_dense_size(n);
  std::vector<char> site(n, 'I');
  for (const auto& [spin, op] : factors) {
    if (spin < 1 || spin > n) throw ValidationError("Pauli factor on spin outside range");
    site[spin - 1] = op;
  }
  // Highest spin is the leftmost Kronecker factor so that spin i maps to bit i - 1.
  Eigen::MatrixXcd out = pauli(site[n - 1]);
  for (int i = n - 2; i >= 0; --i) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(out, pauli(site[i])).eval();
    out = std::move(next);
  }
  return out;
}

DenseParts dense_parts(const SpinProblem& problem, const TriggerSpec& trigger) {
  problem.validate();
  check_dense_size(problem.n);
  const int n = problem.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  DenseParts parts;
  parts.initial = Eigen::MatrixXcd::Zero(dim, dim);
  parts.trigger = Eigen::MatrixXcd::Zero(dim, dim);
  parts.problem = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 1; i <= n; ++i) {
    parts.initial -= pauli_string(n, {{i, 'X'}});
    parts.problem -= problem.h_z[i - 1] * pauli_string(n, {{i, 'Z'}});
  }
  const double xx = trigger.strength();
  for (const auto& c : problem.z_couplings) {
    if (c.value == 0.0) continue;
    parts.problem -= c.value * pauli_string(n, {{c.i, 'Z'}, {c.j, 'Z'}});
    if (problem.y_coupling_strength != 0.0) {
      parts.problem -= problem.y_coupling_strength * pauli_string(n, {{c.i, 'Y'}, {c.j, 'Y'}});
    }
    if (xx != 0.0) parts.trigger -= xx * pauli_string(n, {{c.i, 'X'}, {c.j, 'X'}});
  }
  return parts;
}

Eigen::MatrixXcd dense_hamiltonian(const OperatorTerms& terms, const ScheduleCoefficients& coeffs) {
  check_dense_size(terms.n);
  const int n = terms.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) h(k, k) = coeffs.b_prob * terms.diag_energy[k];
  for (int i = 1; i <= n; ++i) h -= coeffs.a_init * terms.x_field[i - 1] * pauli_string(n, {{i, 'X'}});
  for (const auto& p : terms.xx_pairs) h -= coeffs.c_trig * p.strength * pauli_string(n, {{p.i, 'X'}, {p.j, 'X'}});
  for (const auto& p : terms.yy_pairs) h -= coeffs.b_prob * p.strength * pauli_string(n, {{p.i, 'Y'}, {p.j, 'Y'}});
  return h;
}

bool is_stoquastic_dense(const Eigen::MatrixXcd& h, double tol) {
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      if (r == c) continue;
      if (std::abs(h(r, c).imag()) > tol || h(r, c).real() > tol) return false;
    }
  }
  return true;
}

void exact_step(const Eigen::MatrixXcd& h, double tau, StateVector& psi) {
  if (h.rows() != static_cast<Eigen::Index>(psi.dim())) throw ValidationError("state dimension does not match the matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::Map<Eigen::VectorXcd> amps(psi.amplitudes.data(), static_cast<Eigen::Index>(psi.dim()));
  const Eigen::VectorXcd phases =
      (solver.eigenvalues().cast<Complex>() * Complex(0.0, -tau)).array().exp().matrix();
  const Eigen::VectorXcd coeff = solver.eigenvectors().adjoint() * amps;
  amps = solver.eigenvectors() * phases.cwiseProduct(coeff);
}

}  // namespace qanneal
