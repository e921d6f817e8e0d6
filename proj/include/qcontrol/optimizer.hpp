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

#ifndef QCONTROL_OPTIMIZER_HPP
#define QCONTROL_OPTIMIZER_HPP

#include <cstdint>

#include "qcontrol/dynamics.hpp"
#include "qcontrol/reachability.hpp"

namespace qcontrol {

struct OptimizerOptions {
  Eigen::Index steps = 64;     // pulse discretization K
  double duration = 10.0;      // pulse length T
  int restarts = 10;
  int max_iters = 2000;
  double learning_rate = 0.1;
  double fd_step = 1e-6;
  double grad_tol = 1e-7;
  double init_amplitude = 1.0;  // restarts > 0 draw uniform [-a, a]
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct OptimizationReport {
  double kinematical_bound = 0.0;
  double best_dynamical_value = 0.0;
  ControlPulse best_pulse;
  long long iterations = 0;   // iterations spent in the winning restart
  bool converged = false;
  double gap = 0.0;           // kinematical_bound - best_dynamical_value
  int best_restart = 0;
};

/// max over unitaries of trace(A U rho0 U^dag): pair both spectra ascending
/// and sum the products.
double kinematical_bound(const HermitianMatrix& a, const DensityMatrix& rho0);

/// Gradient ascent on trace(A U(pulse) rho0 U(pulse)^dag) over the K x M
/// amplitude array, multiple random restarts, central finite differences
/// with cached partial propagators.
OptimizationReport maximize_expectation(const ControlSystem& system, const DensityMatrix& rho0,
                                        const HermitianMatrix& a, const OptimizerOptions& opts = {});

/// max of trace(A exp(X) rho0 exp(X)^dag) over X in the algebra: the
/// group-level ceiling for any pulse, independent of pulse parametrization.
double orbit_bound(const LieAlgebraBasis& basis, const DensityMatrix& rho0,
                   const HermitianMatrix& a, const SearchOptions& opts = {});

namespace reference {
/// Serial restart loop for maximize_expectation, comparison baseline.
OptimizationReport maximize_expectation(const ControlSystem& system, const DensityMatrix& rho0,
                                        const HermitianMatrix& a, OptimizerOptions opts = {});
}  // namespace reference

}  // namespace qcontrol

#endif  // QCONTROL_OPTIMIZER_HPP
