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

#include "qanneal/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <span>

#include <Eigen/Dense>

#include "qanneal/errors.hpp"
#include "qanneal/rng.hpp"

namespace qanneal {

namespace {

// Block Krylov basis with full Gram-Schmidt (repeated when needed). The projected
// matrix T = V^T H V is accumulated column by column.
class KrylovBasis {
 public:
  KrylovBasis(const OperatorTerms& terms, const ScheduleCoefficients& coeffs, int capacity)
      : terms_(terms), coeffs_(coeffs), dim_(static_cast<Eigen::Index>(terms.dim())),
        v_(dim_, capacity), hv_(dim_, capacity), t_(capacity, capacity) {}

  Eigen::Index size() const { return p_; }
  Eigen::Index capacity() const { return v_.cols(); }
  Eigen::Index dim() const { return dim_; }

  void clear() { p_ = 0; }

  // Returns false when the candidate is (numerically) in the current span.
  bool add(Eigen::VectorXd w) {
    if (p_ >= capacity() || p_ >= dim_) return false;
    const double original = w.norm();
    if (!(original > 0.0)) return false;
    // Second pass only when the first removed most of the vector.
    double before = original;
    for (int pass = 0; pass < 2 && p_ > 0; ++pass) {
      const Eigen::VectorXd c = v_.leftCols(p_).transpose() * w;
      w.noalias() -= v_.leftCols(p_) * c;
      const double after = w.norm();
      if (after > 0.7 * before) break;
      before = after;
    }
    const double remaining = w.norm();
    if (remaining < 1e-10 * original) return false;
    v_.col(p_) = w / remaining;
    Eigen::VectorXd out(dim_);
    apply_hamiltonian<double>(terms_, coeffs_,
                              std::span<const double>(v_.col(p_).data(), static_cast<std::size_t>(dim_)),
                              std::span<double>(out.data(), static_cast<std::size_t>(dim_)));
    store(out);
    return true;
  }

  // x must be orthonormal to the basis already; hx = H x.
  void add_known(const Eigen::VectorXd& x, const Eigen::VectorXd& hx) {
    v_.col(p_) = x;
    store(hx);
  }

  const Eigen::VectorXd hv(Eigen::Index j) const { return hv_.col(j); }

  // Part of H v_j outside the current span.
  Eigen::VectorXd outside(Eigen::Index j) const {
    Eigen::VectorXd w = hv_.col(j);
    for (int pass = 0; pass < 2; ++pass) w.noalias() -= v_.leftCols(p_) * (v_.leftCols(p_).transpose() * w);
    return w;
  }

  struct Ritz {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;    // in the full space, lowest `count`
    Eigen::VectorXd residuals;  // ||H x - theta x|| from the stored products
    Eigen::MatrixXd residual_vectors;
  };

  Ritz ritz(int count) const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t_.topLeftCorner(p_, p_));
    const int m = std::min<int>(count, static_cast<int>(p_));
    Ritz r;
    r.values = eig.eigenvalues().head(m);
    const Eigen::MatrixXd y = eig.eigenvectors().leftCols(m);
    r.vectors = v_.leftCols(p_) * y;
    r.residual_vectors = hv_.leftCols(p_) * y - r.vectors * r.values.asDiagonal();
    r.residuals = r.residual_vectors.colwise().norm().transpose();
    return r;
  }

 private:
  void store(const Eigen::VectorXd& hx) {
    hv_.col(p_) = hx;
    const Eigen::VectorXd tc = v_.leftCols(p_ + 1).transpose() * hx;
    t_.col(p_).head(p_ + 1) = tc;
    t_.row(p_).head(p_ + 1) = tc.transpose();
    ++p_;
  }

  const OperatorTerms& terms_;
  ScheduleCoefficients coeffs_;
  Eigen::Index dim_;
  Eigen::MatrixXd v_;
  Eigen::MatrixXd hv_;
  Eigen::MatrixXd t_;
  Eigen::Index p_ = 0;
};

Eigen::VectorXd random_vector(Rng& rng, Eigen::Index dim) {
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = standard_normal(rng);
  return v;
}

double true_residual(const OperatorTerms& terms, const ScheduleCoefficients& coeffs,
                     const Eigen::VectorXd& x, double theta) {
  Eigen::VectorXd hx(x.size());
  apply_hamiltonian<double>(terms, coeffs, std::span<const double>(x.data(), x.size()),
                            std::span<double>(hx.data(), hx.size()));
  return (hx - theta * x).norm();
}

}  // namespace

static SpectrumSample lanczos_attempt(const OperatorTerms& terms, double s, const LanczosOptions& options) {
  const int k = options.k;
  if (k < 1 || k > kMaxLanczosPairs) {
    throw ValidationError("k must be in 1.." + std::to_string(kMaxLanczosPairs));
  }
  if (terms.dim() < static_cast<std::uint64_t>(k)) {
    throw ValidationError("k exceeds the Hilbert space dimension");
  }
  const ScheduleCoefficients coeffs = schedule_coeffs(s);
  const Eigen::Index dim = static_cast<Eigen::Index>(terms.dim());
  const int block = k;
  const int capacity = static_cast<int>(std::min<Eigen::Index>(
      dim, std::max(options.max_basis, 4 * k + 2 * block)));
  // Internal target sits below the contract so the final recomputed
  // residuals clear it comfortably.
  const double target = 0.25 * options.tolerance;
  const int keep_count = std::max(k, capacity / 2 - block);

  KrylovBasis basis(terms, coeffs, capacity);
  Rng rng(derive_seed(options.seed, 0x4c414e43ull));

  std::vector<Eigen::VectorXd> candidates;
  if (options.warm_start != nullptr) {
    for (const auto& v : *options.warm_start) {
      if (static_cast<Eigen::Index>(v.size()) != dim) throw ValidationError("warm start dimension mismatch");
      candidates.emplace_back(Eigen::Map<const Eigen::VectorXd>(v.data(), dim));
    }
  }
  // One random direction guards against a warm start confined to a sector.
  const int randoms = std::max<int>(1, block - static_cast<int>(candidates.size()));
  for (int b = 0; b < randoms; ++b) candidates.push_back(random_vector(rng, dim));

  KrylovBasis::Ritz best;
  std::vector<double> best_residuals;
  int restarts = 0;
  int since_check = 0;
  const int check_every = std::max(1, 12 / block);
  while (true) {
    const Eigen::Index first = basis.size();
    for (auto& c : candidates) basis.add(std::move(c));
    candidates.clear();
    const bool exhausted = basis.size() == dim;
    const bool invariant = basis.size() == first;
    // The next expansion is as wide as this one; restart before it would not fit.
    const bool full = basis.size() + std::max<Eigen::Index>(basis.size() - first, 1) > basis.capacity();
    ++since_check;

    if (invariant && basis.size() < k && !exhausted) {
      // Krylov space closed before k pairs were found: inject fresh directions.
      for (int b = 0; b < block; ++b) candidates.push_back(random_vector(rng, dim));
      continue;
    }
    bool restart = full;
    if (basis.size() >= k && (since_check >= check_every || exhausted || invariant || full)) {
      since_check = 0;
      best = basis.ritz(k);
      if ((best.residuals.array() < target).all() || exhausted || invariant) {
        // Confirm against a fresh matvec before accepting.
        std::vector<double> res(k);
        bool ok = true;
        for (int j = 0; j < k; ++j) {
          best.vectors.col(j).normalize();
          res[j] = true_residual(terms, coeffs, best.vectors.col(j), best.values[j]);
          ok = ok && res[j] < options.tolerance;
        }
        best_residuals = res;
        if (ok) {
          SpectrumSample sample;
          sample.s = s;
          sample.energies.assign(best.values.data(), best.values.data() + k);
          sample.residuals = res;
          if (options.want_vectors) {
            std::vector<StateVector> vecs;
            for (int j = 0; j < k; ++j) {
              StateVector v{terms.n, std::vector<Complex>(static_cast<std::size_t>(dim))};
              for (Eigen::Index i = 0; i < dim; ++i) v.amplitudes[i] = best.vectors(i, j);
              vecs.push_back(std::move(v));
            }
            sample.eigenvectors = std::move(vecs);
          }
          return sample;
        }
        restart = true;
      }
    }
    if (restart) {
      if (++restarts > options.max_restarts) break;
      // Thick restart: keep the lowest half of the Ritz vectors so clusters
      // near E_{k-1} stay resolved, and continue from the last block's
      // new directions, which hold every Ritz residual.
      const KrylovBasis::Ritz keep = basis.ritz(keep_count);
      std::vector<Eigen::VectorXd> next;
      for (Eigen::Index j = first; j < basis.size(); ++j) next.push_back(basis.outside(j));
      basis.clear();
      for (Eigen::Index j = 0; j < keep.vectors.cols(); ++j)
        basis.add_known(keep.vectors.col(j), keep.residual_vectors.col(j) + keep.values[j] * keep.vectors.col(j));
      candidates = std::move(next);
      if (candidates.empty()) candidates.push_back(random_vector(rng, dim));
      continue;
    }
    for (Eigen::Index j = first; j < basis.size(); ++j) candidates.push_back(basis.hv(j));
  }
  if (best_residuals.empty() && best.residuals.size() > 0) {
    best_residuals.assign(best.residuals.data(), best.residuals.data() + best.residuals.size());
  }
  throw NumericalError("Lanczos did not converge at s = " + std::to_string(s), best_residuals);
}

SpectrumSample lanczos_lowest(const OperatorTerms& terms, double s, const LanczosOptions& options) {
  if (options.warm_start == nullptr) {
    try {
      return lanczos_attempt(terms, s, options);
    } catch (const NumericalError&) {
      LanczosOptions wide = options;
      wide.max_basis = 2 * options.max_basis;
      return lanczos_attempt(terms, s, wide);
    }
  }
  // A warm start from a neighbouring s can stall when levels inside a dense
  // cluster reorder; give it a short budget, then start cold.
  LanczosOptions warm = options;
  warm.max_restarts = std::min(options.max_restarts, 40);
  try {
    return lanczos_attempt(terms, s, warm);
  } catch (const NumericalError&) {
  }
  LanczosOptions cold = options;
  cold.warm_start = nullptr;
  return lanczos_lowest(terms, s, cold);
}

SpectrumSample lanczos_lowest(const OperatorTerms& terms, double s, int k, std::uint64_t seed,
                              bool want_vectors) {
  LanczosOptions options;
  options.k = k;
  options.seed = seed;
  options.want_vectors = want_vectors;
  return lanczos_lowest(terms, s, options);
}

std::vector<std::vector<double>> real_vectors(const SpectrumSample& sample) {
  std::vector<std::vector<double>> out;
  if (!sample.eigenvectors) return out;
  for (const auto& v : *sample.eigenvectors) {
    std::vector<double> r(v.amplitudes.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = v.amplitudes[i].real();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> GapProfile::s_values() const {
  std::vector<double> out;
  for (const auto& x : samples) out.push_back(x.s);
  return out;
}

std::vector<double> GapProfile::gaps() const {
  std::vector<double> out;
  for (const auto& x : samples) out.push_back(x.gap());
  return out;
}

namespace {

struct Minimum {
  std::size_t index;
  double prominence;
};

// Interior local minima of d with their topographic prominence.
std::vector<Minimum> local_minima(const std::vector<double>& d) {
  std::vector<Minimum> out;
  const std::size_t n = d.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(d[i] < d[i - 1])) continue;
    std::size_t j = i;
    while (j + 1 < n && d[j + 1] == d[i]) ++j;
    if (j + 1 >= n || !(d[j + 1] > d[i])) {
      i = j;
      continue;
    }
    double left = d[i];
    for (std::size_t m = i; m-- > 0;) {
      if (d[m] < d[i]) break;
      left = std::max(left, d[m]);
    }
    double right = d[i];
    for (std::size_t m = j + 1; m < n; ++m) {
      if (d[m] < d[i]) break;
      right = std::max(right, d[m]);
    }
    out.push_back({i, std::min(left, right) - d[i]});
    i = j;
  }
  return out;
}

// Neighbouring samples seed each other: the previous eigenvectors start the
// next Krylov block, which cuts the basis size needed for convergence.
class ProfileBuilder {
 public:
  ProfileBuilder(const OperatorTerms& terms, const GapProfileOptions& options)
      : terms_(terms), options_(options) {}

  SpectrumSample sample(double s, std::vector<std::vector<double>>* chain = nullptr) const {
    LanczosOptions lo;
    lo.k = options_.k;
    lo.seed = derive_seed(options_.seed, std::bit_cast<std::uint64_t>(s));
    lo.want_vectors = chain != nullptr;
    if (chain != nullptr && !chain->empty()) lo.warm_start = chain;
    SpectrumSample out = lanczos_lowest(terms_, s, lo);
    if (chain != nullptr) {
      *chain = real_vectors(out);
      out.eigenvectors.reset();
    }
    return out;
  }

 private:
  const OperatorTerms& terms_;
  const GapProfileOptions& options_;
};

void sort_samples(std::vector<SpectrumSample>& samples) {
  std::sort(samples.begin(), samples.end(),
            [](const SpectrumSample& a, const SpectrumSample& b) { return a.s < b.s; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const SpectrumSample& a, const SpectrumSample& b) { return a.s == b.s; }),
                samples.end());
}

}  // namespace

GapProfile gap_profile(const SpinProblem& problem, const TriggerSpec& trigger,
                       const GapProfileOptions& options) {
  if (options.grid_points < 101) throw ValidationError("gap profile needs at least 101 grid points");
  if (options.k < 2) throw ValidationError("gap profile needs k >= 2");
  const OperatorTerms terms = OperatorTerms::build(problem, trigger);
  const ProfileBuilder builder(terms, options);

  GapProfile profile;
  const int g = options.grid_points;
  std::vector<std::vector<double>> chain;
  for (int i = 0; i < g; ++i) {
    const double s = (i == g - 1) ? 1.0 : static_cast<double>(i) / (g - 1);
    profile.samples.push_back(builder.sample(s, &chain));
  }

  // |dE_k/ds| <= ||dH/ds||; a larger jump means a level was missed.
  const double lipschitz = terms.derivative_norm_bound();
  for (int depth = 0; depth < options.max_continuity_depth; ++depth) {
    std::vector<SpectrumSample> extra;
    auto& sm = profile.samples;
    for (std::size_t i = 0; i + 1 < sm.size(); ++i) {
      const double ds = sm[i + 1].s - sm[i].s;
      bool jump = false;
      for (int q = 0; q < options.k; ++q) {
        jump = jump || std::abs(sm[i + 1].energies[q] - sm[i].energies[q]) > lipschitz * ds * 1.001 + 1e-9;
      }
      if (jump) extra.push_back(builder.sample(0.5 * (sm[i].s + sm[i + 1].s)));
    }
    if (extra.empty()) break;
    profile.continuity_refinements += static_cast<int>(extra.size());
    for (auto& x : extra) sm.push_back(std::move(x));
    sort_samples(sm);
  }

  if (options.refine) {
    std::vector<Minimum> minima = local_minima(profile.gaps());
    std::sort(minima.begin(), minima.end(), [&](const Minimum& a, const Minimum& b) {
      return profile.samples[a.index].gap() < profile.samples[b.index].gap();
    });
    if (static_cast<int>(minima.size()) > options.max_refined_minima) minima.resize(options.max_refined_minima);
    std::vector<SpectrumSample> extra;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    for (const auto& m : minima) {
      double a = profile.samples[m.index - 1].s;
      double b = profile.samples[m.index + 1].s;
      double x1 = b - phi * (b - a);
      double x2 = a + phi * (b - a);
      chain.clear();
      SpectrumSample f1 = builder.sample(x1, &chain);
      SpectrumSample f2 = builder.sample(x2, &chain);
      while (b - a > options.refine_resolution) {
        if (f1.gap() <= f2.gap()) {
          b = x2;
          x2 = x1;
          extra.push_back(std::move(f2));
          f2 = std::move(f1);
          x1 = b - phi * (b - a);
          f1 = builder.sample(x1, &chain);
        } else {
          a = x1;
          x1 = x2;
          extra.push_back(std::move(f1));
          f1 = std::move(f2);
          x2 = a + phi * (b - a);
          f2 = builder.sample(x2, &chain);
        }
      }
      extra.push_back(std::move(f1));
      extra.push_back(std::move(f2));
    }
    for (auto& x : extra) profile.samples.push_back(std::move(x));
    sort_samples(profile.samples);
  }

  const auto d = profile.gaps();
  const auto it = std::min_element(d.begin(), d.end());
  profile.delta_min = *it;
  profile.s_min = profile.samples[static_cast<std::size_t>(it - d.begin())].s;
  profile.anticrossings = find_anticrossings(profile, options.prominence_ratio);
  profile.stretch_width = stretch_width(profile);
  return profile;
}

std::vector<Anticrossing> find_anticrossings(const GapProfile& profile, double prominence_ratio) {
  const auto d = profile.gaps();
  std::vector<Anticrossing> out;
  if (d.size() < 3) return out;
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  const double threshold = prominence_ratio * (*hi - *lo);
  for (const auto& m : local_minima(d)) {
    if (m.prominence > threshold) out.push_back({profile.samples[m.index].s, d[m.index], m.prominence});
  }
  return out;
}

int count_anticrossings(const GapProfile& profile, double prominence_ratio) {
  return static_cast<int>(find_anticrossings(profile, prominence_ratio).size());
}

double stretch_width(const GapProfile& profile) {
  const auto& sm = profile.samples;
  if (sm.empty()) return 0.0;
  const auto d = profile.gaps();
  const std::size_t c = static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());
  const double limit = 2.0 * d[c];
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double t = (limit - d[inside]) / (d[outside] - d[inside]);
    return sm[inside].s + t * (sm[outside].s - sm[inside].s);
  };
  std::size_t l = c;
  while (l > 0 && d[l - 1] <= limit) --l;
  std::size_t r = c;
  while (r + 1 < sm.size() && d[r + 1] <= limit) ++r;
  const double left = l == 0 ? sm.front().s : crossing(l, l - 1);
  const double right = r + 1 == sm.size() ? sm.back().s : crossing(r, r + 1);
  return right - left;
}

void write_profile_table(std::ostream& out, const GapProfile& profile) {
  const std::size_t k = profile.samples.empty() ? 0 : profile.samples.front().energies.size();
  out << "s";
  for (std::size_t q = 0; q < k; ++q) out << ",E" << q;
  out << ",delta\n";
  char buf[64];
  for (const auto& x : profile.samples) {
    std::snprintf(buf, sizeof buf, "%.8f", x.s);
    out << buf;
    for (double e : x.energies) {
      std::snprintf(buf, sizeof buf, ",%.12g", e);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, ",%.12g\n", x.gap());
    out << buf;
  }
}

}  // namespace qanneal
