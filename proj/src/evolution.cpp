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

#include "qanneal/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "qanneal/dense.hpp"
#include "qanneal/errors.hpp"

namespace qanneal {

void EvolutionConfig::validate() const {
  if (!(t_anneal > 0.0) || !std::isfinite(t_anneal)) throw ValidationError("T_A must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ValidationError("tau must be positive");
  if (tau > t_anneal) throw ValidationError("tau must not exceed T_A");
  if (record_stride < 0) throw ValidationError("record stride must be nonnegative");
}

StepPlan plan_steps(const EvolutionConfig& config) {
  config.validate();
  StepPlan plan;
  plan.steps = std::max<std::int64_t>(1, std::llround(config.t_anneal / config.tau));
  plan.tau = config.t_anneal / static_cast<double>(plan.steps);
  plan.adjusted = std::abs(plan.tau - config.tau) > 1e-14 * config.tau;
  return plan;
}

StateVector init_uniform_state(int n) {
  if (n < 1 || n > kMaxStateSpins) {
    throw CapacityError("state vectors support 1.." + std::to_string(kMaxStateSpins) + " spins");
  }
  const std::size_t dim = std::size_t{1} << n;
  return StateVector{n, std::vector<Complex>(dim, Complex(std::pow(2.0, -0.5 * n), 0.0))};
}

namespace {

// Rotation exp(-i alpha M) on every amplitude pair (k, k ^ mask), where M has
// the real off-diagonal entry +1 (or, for sy sy, -1 on equal bits) and
// `low` is the lowest set bit of `mask`.
void rotate_pairs(Complex* amps, std::uint64_t dim, std::uint64_t low, std::uint64_t mask,
                  double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  double* d = reinterpret_cast<double*>(amps);
  for (std::uint64_t base = 0; base < dim; base += 2 * low) {
    for (std::uint64_t k = base; k < base + low; ++k) {
      const std::uint64_t p = k ^ mask;
      const double xr = d[2 * k], xi = d[2 * k + 1];
      const double yr = d[2 * p], yi = d[2 * p + 1];
      d[2 * k] = c * xr + s * yi;
      d[2 * k + 1] = c * xi - s * yr;
      d[2 * p] = c * yr + s * xi;
      d[2 * p + 1] = c * yi - s * xr;
    }
  }
}

void rotate_pairs_yy(Complex* amps, std::uint64_t dim, std::uint64_t low, std::uint64_t high,
                     double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const std::uint64_t mask = low | high;
  double* d = reinterpret_cast<double*>(amps);
  for (std::uint64_t base = 0; base < dim; base += 2 * low) {
    for (std::uint64_t k = base; k < base + low; ++k) {
      // k has the low bit clear, so the two bits agree iff the high bit is clear.
      const double es = (k & high) ? s : -s;
      const std::uint64_t p = k ^ mask;
      const double xr = d[2 * k], xi = d[2 * k + 1];
      const double yr = d[2 * p], yi = d[2 * p + 1];
      d[2 * k] = c * xr + es * yi;
      d[2 * k + 1] = c * xi - es * yr;
      d[2 * p] = c * yr + es * xi;
      d[2 * p + 1] = c * yi - es * xr;
    }
  }
}

std::uint64_t low_bit(const PairTerm& p) { return std::uint64_t{1} << (std::min(p.i, p.j) - 1); }
std::uint64_t high_bit(const PairTerm& p) { return std::uint64_t{1} << (std::max(p.i, p.j) - 1); }

}  // namespace

ProductFormulaPropagator::ProductFormulaPropagator(const OperatorTerms& terms) : terms_(terms) {
  // Integer-valued problems have few distinct diagonal energies; phases are
  // then evaluated once per level instead of once per amplitude.
  const std::uint64_t dim = terms_.dim();
  std::unordered_map<double, std::uint32_t> index;
  std::vector<std::uint32_t> level(dim);
  for (std::uint64_t k = 0; k < dim; ++k) {
    const auto [it, inserted] = index.try_emplace(terms_.diag_energy[k],
                                                  static_cast<std::uint32_t>(levels_.size()));
    if (inserted) {
      levels_.push_back(terms_.diag_energy[k]);
      if (levels_.size() > std::max<std::uint64_t>(64, dim / 8)) break;
    }
    level[k] = it->second;
  }
  if (levels_.size() <= std::max<std::uint64_t>(64, dim / 8)) {
    level_ = std::move(level);
  } else {
    levels_.clear();
  }
}

void ProductFormulaPropagator::apply_diagonal(StateVector& psi, double angle) const {
  if (angle == 0.0) return;
  const std::uint64_t dim = terms_.dim();
  if (!level_.empty()) {
    std::vector<Complex> phase(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) phase[l] = std::polar(1.0, -angle * levels_[l]);
    for (std::uint64_t k = 0; k < dim; ++k) {
      const Complex& w = phase[level_[k]];
      Complex& a = psi.amplitudes[k];
      a = Complex(w.real() * a.real() - w.imag() * a.imag(), w.real() * a.imag() + w.imag() * a.real());
    }
    return;
  }
  for (std::uint64_t k = 0; k < dim; ++k) {
    const Complex w = std::polar(1.0, -angle * terms_.diag_energy[k]);
    Complex& a = psi.amplitudes[k];
    a = Complex(w.real() * a.real() - w.imag() * a.imag(), w.real() * a.imag() + w.imag() * a.real());
  }
}

void ProductFormulaPropagator::apply_x(StateVector& psi, double weight, double dt) const {
  if (weight == 0.0) return;
  for (int i = 0; i < terms_.n; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    rotate_pairs(psi.amplitudes.data(), terms_.dim(), bit, bit, -weight * terms_.x_field[i] * dt);
  }
}

void ProductFormulaPropagator::apply_xx(StateVector& psi, double weight, double dt) const {
  if (weight == 0.0) return;
  for (const auto& p : terms_.xx_pairs) {
    rotate_pairs(psi.amplitudes.data(), terms_.dim(), low_bit(p), p.mask(), -weight * p.strength * dt);
  }
}

void ProductFormulaPropagator::apply_yy(StateVector& psi, double weight, double dt) const {
  if (weight == 0.0) return;
  for (const auto& p : terms_.yy_pairs) {
    rotate_pairs_yy(psi.amplitudes.data(), terms_.dim(), low_bit(p), high_bit(p),
                    -weight * p.strength * dt);
  }
}

void ProductFormulaPropagator::apply_offdiagonal(StateVector& psi, const ScheduleCoefficients& co,
                                                 double dt) const {
  if (terms_.yy_pairs.empty() || co.b_prob == 0.0) {
    // x and xx factors commute: the two half-steps around an empty yy
    // factor combine into full steps.
    apply_x(psi, co.a_init, dt);
    apply_xx(psi, co.c_trig, dt);
    return;
  }
  apply_x(psi, co.a_init, 0.5 * dt);
  apply_xx(psi, co.c_trig, 0.5 * dt);
  apply_yy(psi, co.b_prob, dt);
  apply_xx(psi, co.c_trig, 0.5 * dt);
  apply_x(psi, co.a_init, 0.5 * dt);
}

void ProductFormulaPropagator::step(StateVector& psi, double s_mid, double tau) const {
  if (psi.dim() != terms_.dim()) throw ValidationError("state dimension does not match operator");
  const ScheduleCoefficients co = schedule_coeffs(s_mid);
  apply_diagonal(psi, 0.5 * tau * co.b_prob);
  apply_offdiagonal(psi, co, tau);
  apply_diagonal(psi, 0.5 * tau * co.b_prob);
}

void ProductFormulaPropagator::propagate(StateVector& psi, double t_anneal, double t_begin,
                                         double t_end, std::int64_t steps, int record_stride,
                                         const StepObserver& observer) const {
  if (psi.dim() != terms_.dim()) throw ValidationError("state dimension does not match operator");
  if (steps <= 0) throw ValidationError("step count must be positive");
  const double dt = (t_end - t_begin) / static_cast<double>(steps);
  auto s_at = [&](double t) { return std::clamp(t / t_anneal, 0.0, 1.0); };
  if (observer) observer(0, s_at(t_begin), psi);
  double pending = 0.0;  // trailing diagonal half-step not yet applied
  for (std::int64_t m = 0; m < steps; ++m) {
    const double t_mid = t_begin + (static_cast<double>(m) + 0.5) * dt;
    const ScheduleCoefficients co = schedule_coeffs(s_at(t_mid));
    apply_diagonal(psi, pending + 0.5 * dt * co.b_prob);
    apply_offdiagonal(psi, co, dt);
    pending = 0.5 * dt * co.b_prob;
    const bool last = m + 1 == steps;
    const bool record = record_stride > 0 && (m + 1) % record_stride == 0;
    if (last || record) {
      apply_diagonal(psi, pending);
      pending = 0.0;
      if (observer && (record || last)) {
        observer(m + 1, s_at(t_begin + static_cast<double>(m + 1) * dt), psi);
      }
    }
  }
}

void trotter_step(StateVector& psi, const OperatorTerms& terms, double s_mid, double tau) {
  ProductFormulaPropagator(terms).step(psi, s_mid, tau);
}

double success_probability(const StateVector& final_state, const GroundTruth& truth) {
  if (static_cast<int>(truth.bitstring.size()) != final_state.n) {
    throw ValidationError("ground truth has " + std::to_string(truth.bitstring.size()) +
                          " spins, state has " + std::to_string(final_state.n));
  }
  if (truth.ground_indices.size() < truth.degeneracy) {
    throw CapacityError("ground space too degenerate to evaluate the overlap");
  }
  double p = 0.0;
  for (std::uint64_t k : truth.ground_indices) p += std::norm(final_state.amplitudes.at(k));
  return std::min(1.0, p);
}

namespace {

AnnealResult finish(StateVector psi, const EvolutionConfig& config, const StepPlan& plan,
                    const GroundTruth& truth, std::vector<TracePoint> trace) {
  AnnealResult result;
  result.final_norm = psi.norm();
  result.success_probability = success_probability(psi, truth);
  result.final_state = std::move(psi);
  result.config = config;
  result.plan = plan;
  result.trace = std::move(trace);
  return result;
}

}  // namespace

AnnealResult evolve(const SpinProblem& problem, const TriggerSpec& trigger,
                    const EvolutionConfig& config, const GroundTruth* truth,
                    const StepObserver& observer) {
  const StepPlan plan = plan_steps(config);
  const OperatorTerms terms = OperatorTerms::build(problem, trigger);
  GroundTruth solved;
  if (truth == nullptr) {
    solved = brute_force_solve(problem);
    truth = &solved;
  }
  ProductFormulaPropagator propagator(terms);
  StateVector psi = init_uniform_state(problem.n);
  std::vector<TracePoint> trace;
  StepObserver record;
  if (config.record_stride > 0 || observer) {
    record = [&](std::int64_t step, double s, const StateVector& state) {
      if (config.record_stride > 0) trace.push_back({step, s, state.norm()});
      if (observer) observer(step, s, state);
    };
  }
  propagator.propagate(psi, config.t_anneal, 0.0, config.t_anneal, plan.steps, config.record_stride,
                       record);
  return finish(std::move(psi), config, plan, *truth, std::move(trace));
}

AnnealResult exact_propagator_evolve(const SpinProblem& problem, const TriggerSpec& trigger,
                                     const EvolutionConfig& config, const GroundTruth* truth) {
  if (problem.n > kMaxExactPropagatorSpins) {
    throw CapacityError("dense propagator supports at most " +
                        std::to_string(kMaxExactPropagatorSpins) + " spins");
  }
  const StepPlan plan = plan_steps(config);
  GroundTruth solved;
  if (truth == nullptr) {
    solved = brute_force_solve(problem);
    truth = &solved;
  }
  const DenseParts parts = dense_parts(problem, trigger);
  StateVector psi = init_uniform_state(problem.n);
  std::vector<TracePoint> trace;
  for (std::int64_t m = 0; m < plan.steps; ++m) {
    const double s_mid = std::clamp((static_cast<double>(m) + 0.5) * plan.tau / config.t_anneal, 0.0, 1.0);
    exact_step(parts.at(schedule_coeffs(s_mid)), plan.tau, psi);
    if (config.record_stride > 0 && (m + 1) % config.record_stride == 0) {
      trace.push_back({m + 1, static_cast<double>(m + 1) * plan.tau / config.t_anneal, psi.norm()});
    }
  }
  return finish(std::move(psi), config, plan, *truth, std::move(trace));
}

}  // namespace qanneal
