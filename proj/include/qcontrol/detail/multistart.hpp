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

#ifndef QCONTROL_DETAIL_MULTISTART_HPP
#define QCONTROL_DETAIL_MULTISTART_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace qcontrol::detail {

/// Small deterministic RNG: splitmix64-seeded xorshift-style stream with an
/// explicit uint64 -> double mapping, so identical seeds give identical
/// draws on every platform.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next_u64();
  double uniform(double lo, double hi);
  double normal();  // Box-Muller

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct GdOptions {
  double learning_rate = 0.1;
  double fd_step = 1e-6;
  double grad_tol = 1e-8;
  int max_iters = 2000;
};

struct GdResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;
using Gradient = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Gradient descent with Armijo backtracking; the step size carries across
/// iterations and doubles on entry, which is what lets the descent traverse
/// long shallow valleys. Pass an empty Gradient to use central differences
/// of `f` with opts.fd_step.
GdResult minimize_adaptive(const Objective& f, const Gradient& grad, Eigen::VectorXd x0,
                           const GdOptions& opts);

struct MultistartResult {
  GdResult best;
  int best_restart = 0;
  std::vector<double> restart_values;
};

using Sampler = std::function<Eigen::VectorXd(Rng&)>;

/// Independent restarts, optionally run under OpenMP. Restart 0 starts at
/// zero, restart r > 0 at sampler(Rng(seed, r)). The winner is the smallest
/// value with the restart index as tie-break, so the result is identical
/// whatever the scheduling.
MultistartResult multistart_minimize(const Objective& f, const Gradient& grad, Eigen::Index dim,
                                     const Sampler& sampler, std::uint64_t seed, int restarts,
                                     const GdOptions& opts, bool parallel);

}  // namespace qcontrol::detail

#endif  // QCONTROL_DETAIL_MULTISTART_HPP
