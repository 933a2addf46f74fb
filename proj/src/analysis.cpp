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

#include "qanneal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "qanneal/errors.hpp"
#include "qanneal/hamiltonian.hpp"
#include "qanneal/rng.hpp"
#include "qanneal/spectrum.hpp"

namespace qanneal {

double lz_model(double a, double b, double delta) { return 1.0 - std::exp(-a * std::pow(delta, b)); }

namespace {

constexpr double kMaxP = 1.0 - 1e-12;

struct Eval {
  double cost = 0.0;  // half the sum of squared errors
  Eigen::Vector2d grad;
  Eigen::Matrix2d jtj;
};

Eval evaluate(const std::vector<LzPoint>& pts, double u, double b) {
  Eval e;
  e.grad.setZero();
  e.jtj.setZero();
  const double a = std::exp(u);
  for (const auto& q : pts) {
    const double x = a * std::pow(q.delta, b);
    const double surv = std::exp(-x);
    const double r = (1.0 - surv) - q.p;
    const Eigen::Vector2d j(surv * x, surv * x * std::log(q.delta));
    e.cost += 0.5 * r * r;
    e.grad += r * j;
    e.jtj += j * j.transpose();
  }
  return e;
}

}  // namespace

LzFitResult lz_fit(const std::vector<LzPoint>& input) {
  if (static_cast<int>(input.size()) < kMinLzPoints) {
    throw ValidationError("Landau-Zener fit needs at least " + std::to_string(kMinLzPoints) + " points");
  }
  std::vector<LzPoint> pts = input;
  for (auto& q : pts) {
    if (!(q.delta > 0.0) || !std::isfinite(q.delta)) throw ValidationError("gaps must be positive");
    if (!(q.p >= 0.0 && q.p <= 1.0)) throw ValidationError("probabilities must lie in [0, 1]");
    q.p = std::min(q.p, kMaxP);
  }
  LzFitResult result;
  result.n_points = static_cast<int>(pts.size());

  const auto [pmin, pmax] = std::minmax_element(pts.begin(), pts.end(),
                                                [](const LzPoint& x, const LzPoint& y) { return x.p < y.p; });
  const auto [dmin, dmax] = std::minmax_element(
      pts.begin(), pts.end(), [](const LzPoint& x, const LzPoint& y) { return x.delta < y.delta; });
  if (pmax->p - pmin->p < 1e-15 || dmax->delta == dmin->delta) {
    result.diagnostics = pmax->p - pmin->p < 1e-15 ? "degenerate data: all probabilities equal"
                                                   : "degenerate data: all gaps equal";
    double sse = 0.0;
    for (const auto& q : pts) sse += (q.p - pts.front().p) * (q.p - pts.front().p);
    result.residual = sse;
    return result;
  }

  std::vector<LzPoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const LzPoint& x, const LzPoint& y) { return x.delta < y.delta; });
  const LzPoint& mid = sorted[sorted.size() / 2];
  double b = 2.0;
  double a0 = -std::log1p(-std::max(mid.p, 1e-12)) / std::pow(mid.delta, b);
  if (!(a0 > 0.0) || !std::isfinite(a0)) a0 = 1.0 / (mid.delta * mid.delta);
  double u = std::log(a0);

  double lambda = 1e-3;
  Eval cur = evaluate(pts, u, b);
  std::ostringstream why;
  for (int it = 0; it < 2000; ++it) {
    result.iterations = it;
    if (cur.grad.lpNorm<Eigen::Infinity>() < 1e-10) {
      result.converged = true;
      why << "gradient below tolerance";
      break;
    }
    Eigen::Matrix2d m = cur.jtj;
    m.diagonal() *= 1.0 + lambda;
    m.diagonal().array() += 1e-300;
    const Eigen::Vector2d step = m.ldlt().solve(-cur.grad);
    const Eval trial = evaluate(pts, u + step[0], b + step[1]);
    if (std::isfinite(trial.cost) && trial.cost <= cur.cost) {
      u += step[0];
      b += step[1];
      cur = trial;
      lambda = std::max(lambda / 3.0, 1e-12);
      if (step.norm() < 1e-12 * (1.0 + std::hypot(u, b))) {
        result.converged = true;
        why << "step below tolerance";
        break;
      }
    } else {
      lambda *= 4.0;
      if (lambda > 1e16) {
        why << "damping limit reached";
        break;
      }
    }
  }
  if (why.str().empty()) why << "iteration limit reached";
  result.a = std::exp(u);
  result.b = b;
  result.residual = 2.0 * cur.cost;
  result.diagnostics = why.str();
  return result;
}

OverlapTrace overlap_trace(const SpinProblem& problem, const TriggerSpec& trigger,
                           const EvolutionConfig& config, int K, std::uint64_t seed) {
  if (K < 1 || K > 4) throw ValidationError("overlap trace supports 1..4 states");
  EvolutionConfig cfg = config;
  const StepPlan plan = plan_steps(config);
  if (cfg.record_stride <= 0) cfg.record_stride = static_cast<int>(std::max<std::int64_t>(1, plan.steps / 200));
  const OperatorTerms terms = OperatorTerms::build(problem, trigger);
  const int kk = static_cast<int>(std::min<std::uint64_t>(K + 1, terms.dim()));

  OverlapTrace trace;
  std::vector<std::vector<double>> chain;
  auto observe = [&](std::int64_t step, double s, const StateVector& psi) {
    LanczosOptions lo;
    lo.k = kk;
    lo.seed = derive_seed(seed, static_cast<std::uint64_t>(step));
    lo.want_vectors = true;
    if (!chain.empty()) lo.warm_start = &chain;
    const SpectrumSample sample = lanczos_lowest(terms, s, lo);
    chain = real_vectors(sample);
    std::vector<double> ov(K, 0.0);
    int head = 0;
    for (int j = 0; j < kk; ++j) {
      if (j > 0 && sample.energies[j] - sample.energies[j - 1] >= kClusterGap) head = j;
      if (head >= K) break;
      ov[head] += std::norm((*sample.eigenvectors)[j].inner(psi));
    }
    trace.s.push_back(s);
    trace.overlaps.push_back(std::move(ov));
    trace.energies.emplace_back(sample.energies.begin(), sample.energies.begin() + std::min(K, kk));
    trace.avg_energy.push_back(expectation(terms, schedule_coeffs(s), psi));
  };
  const AnnealResult run = evolve(problem, trigger, cfg, nullptr, observe);
  trace.success_probability = run.success_probability;
  trace.final_norm = run.final_norm;
  return trace;
}

std::vector<std::pair<double, double>> average_energy_trace(const SpinProblem& problem,
                                                            const TriggerSpec& trigger,
                                                            const EvolutionConfig& config) {
  EvolutionConfig cfg = config;
  const StepPlan plan = plan_steps(config);
  if (cfg.record_stride <= 0) cfg.record_stride = static_cast<int>(std::max<std::int64_t>(1, plan.steps / 200));
  const OperatorTerms terms = OperatorTerms::build(problem, trigger);
  std::vector<std::pair<double, double>> out;
  evolve(problem, trigger, cfg, nullptr, [&](std::int64_t, double s, const StateVector& psi) {
    out.emplace_back(s, expectation(terms, schedule_coeffs(s), psi));
  });
  return out;
}

}  // namespace qanneal
