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

#ifndef QCONTROL_REACHABILITY_HPP
#define QCONTROL_REACHABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qcontrol/density.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/lie_closure.hpp"

namespace qcontrol {

/// Knobs for the random-restart gradient searches over Lie-algebra
/// coefficients. Restart 0 starts from zero coefficients; the rest draw
/// uniform [-pi, pi] per coefficient from a per-restart stream of `seed`.
struct SearchOptions {
  std::uint64_t seed = 0;
  int restarts = 20;
  int max_iters = 2000;
  double learning_rate = 0.1;
  double fd_step = 1e-6;
  double grad_tol = 1e-8;
  bool parallel = true;
};

struct OrbitSearchResult {
  double best_distance = 0.0;       // ||U r0 U^dag - r1||_F at the optimum
  Eigen::VectorXd best_coeffs;
  int best_restart = 0;
  bool converged = false;           // gradient norm reached grad_tol
  long long iterations = 0;         // iterations spent in the best restart
};

/// Minimizes ||exp(X) r0 exp(X)^dag - r1||_F over X = sum_k c_k e_k in the
/// algebra: a constructive reachability certificate when the distance
/// reaches ~0, a lower-bound witness otherwise.
OrbitSearchResult orbit_search(const LieAlgebraBasis& basis, const DensityMatrix& r0,
                               const DensityMatrix& r1, const SearchOptions& opts = {});

enum class Reachability { reachable_numeric, excluded_by_form, excluded_kinematic, inconclusive };

const char* to_string(Reachability r);

struct ReachabilityVerdict {
  bool kinematic = false;
  /// Present iff the algebra admits an invariant form: true when the form
  /// constraint does not separate the two states.
  std::optional<bool> form_necessary;
  /// Form-constraint residuals of the two decompositions, when a form exists.
  std::optional<double> form_residual_from;
  std::optional<double> form_residual_to;
  /// Present iff the orbit search ran.
  std::optional<double> orbit_distance;
  Reachability verdict = Reachability::inconclusive;
  std::uint64_t seed = 0;
  std::string notes;
};

/// Pipeline: spectra -> form obstruction -> orbit search.
ReachabilityVerdict reachable_verdict(const ControlSystem& system, const DensityMatrix& r0,
                                      const DensityMatrix& r1, const SearchOptions& opts = {});

namespace reference {
/// Plain serial restart loop, same per-restart math as orbit_search.
OrbitSearchResult orbit_search(const LieAlgebraBasis& basis, const DensityMatrix& r0,
                               const DensityMatrix& r1, SearchOptions opts = {});
}  // namespace reference

}  // namespace qcontrol

#endif  // QCONTROL_REACHABILITY_HPP
