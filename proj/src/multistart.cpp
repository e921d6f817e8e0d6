// Copyright 2026 the qcontrol authors
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

#include "qcontrol/detail/multistart.hpp"

#include <cmath>

namespace qcontrol::detail {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t mix = seed;
  (void)splitmix64(mix);
  mix ^= 0xA0761D6478BD642FULL * (stream + 1);
  state_ = mix;
  // warm up so nearby (seed, stream) pairs decorrelate
  (void)splitmix64(state_);
  (void)splitmix64(state_);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform(0.0, 1.0);
  } while (u1 <= 1e-300);
  const double u2 = uniform(0.0, 1.0);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

GdResult minimize_adaptive(const Objective& f, const Gradient& grad, Eigen::VectorXd x0,
                           const GdOptions& opts) {
  const Eigen::Index dim = x0.size();
  GdResult res;
  res.x = std::move(x0);
  res.value = f(res.x);

  const auto fd_gradient = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(dim);
    Eigen::VectorXd probe = x;
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double orig = probe[k];
      probe[k] = orig + opts.fd_step;
      const double fp = f(probe);
      probe[k] = orig - opts.fd_step;
      const double fm = f(probe);
      probe[k] = orig;
      g[k] = (fp - fm) / (2.0 * opts.fd_step);
    }
    return g;
  };

  double eta = opts.learning_rate;
  for (int it = 0; it < opts.max_iters; ++it) {
    res.iterations = it + 1;
    const Eigen::VectorXd g = grad ? grad(res.x) : fd_gradient(res.x);
    const double gnorm = g.norm();
    if (gnorm <= opts.grad_tol) {
      res.converged = true;
      return res;
    }
    // Armijo backtracking; the accepted step seeds the next iteration
    // (doubled), which is what carries the descent through shallow valleys.
    eta = std::min(eta * 2.0, 1e3);
    bool improved = false;
    while (eta > 1e-14) {
      const Eigen::VectorXd cand = res.x - eta * g;
      const double fc = f(cand);
      if (fc < res.value - 1e-4 * eta * gnorm * gnorm) {
        res.x = cand;
        res.value = fc;
        improved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!improved) {
      return res;  // line search exhausted; converged stays false
    }
  }
  return res;
}

MultistartResult multistart_minimize(const Objective& f, const Gradient& grad, Eigen::Index dim,
                                     const Sampler& sampler, std::uint64_t seed, int restarts,
                                     const GdOptions& opts, bool parallel) {
  if (restarts < 1) {
    restarts = 1;
  }
  std::vector<GdResult> results(static_cast<std::size_t>(restarts));

  const auto run_one = [&](int r) {
    Eigen::VectorXd x0;
    if (r == 0) {
      x0 = Eigen::VectorXd::Zero(dim);
    } else {
      Rng rng(seed, static_cast<std::uint64_t>(r));
      x0 = sampler(rng);
    }
    results[static_cast<std::size_t>(r)] = minimize_adaptive(f, grad, std::move(x0), opts);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
      run_one(r);
    }
  } else {
    for (int r = 0; r < restarts; ++r) {
      run_one(r);
    }
  }

  // Deterministic reduction: smallest value, restart index breaks ties.
  MultistartResult out;
  out.restart_values.reserve(results.size());
  int best = 0;
  for (int r = 0; r < restarts; ++r) {
    out.restart_values.push_back(results[static_cast<std::size_t>(r)].value);
    if (results[static_cast<std::size_t>(r)].value < results[static_cast<std::size_t>(best)].value) {
      best = r;
    }
  }
  out.best = std::move(results[static_cast<std::size_t>(best)]);
  out.best_restart = best;
  return out;
}

}  // namespace qcontrol::detail
