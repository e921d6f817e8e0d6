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

#ifndef QCONTROL_DYNAMICS_HPP
#define QCONTROL_DYNAMICS_HPP

#include <vector>

#include "qcontrol/density.hpp"
#include "qcontrol/models.hpp"

namespace qcontrol {

/// Piecewise-constant control amplitudes on a uniform grid: K steps of
/// length duration/K, amplitudes(k, m) = value of control m on step k.
struct ControlPulse {
  double duration;           // >= 0
  Eigen::Index steps;        // K >= 1
  Eigen::MatrixXd amplitudes;  // K x M

  ControlPulse(double duration_in, Eigen::Index steps_in, Eigen::MatrixXd amplitudes_in);
  /// All-zero pulse with M columns.
  static ControlPulse zero(double duration, Eigen::Index steps, Eigen::Index num_controls);
  Eigen::Index num_controls() const { return amplitudes.cols(); }
};

struct PropagateOptions {
  bool keep_intermediates = false;
  bool parallel = true;  // compute step factors with OpenMP
};

struct PropagationResult {
  ComplexMatrix final_unitary;
  /// Cumulative propagators U(t_k, 0), one per step, when requested.
  std::vector<ComplexMatrix> intermediate_unitaries;
  double unitarity_defect = 0.0;  // ||U^dag U - I||_F
};

/// Exact piecewise-constant propagation: U = prod_{k=K..1} exp(-i dt H_k)
/// with H_k = H0 + sum_m f_m[k] H_m, later factors multiplying from the
/// left. Step exponentials may be computed in parallel; the product is
/// assembled in step order regardless.
PropagationResult propagate(const ControlSystem& system, const ControlPulse& pulse,
                            const PropagateOptions& opts = {});

/// U rho U^dag. U must be unitary within 1e-8.
DensityMatrix evolve_density(const DensityMatrix& rho, const ComplexMatrix& u);

/// trace(A rho), real up to roundoff.
double expectation(const HermitianMatrix& a, const DensityMatrix& rho);

namespace reference {
/// Naive sequential propagation kept as the comparison baseline for the
/// parallel kernel: accumulates U step by step with no factor caching.
ComplexMatrix propagate(const ControlSystem& system, const ControlPulse& pulse);
}  // namespace reference

}  // namespace qcontrol

#endif  // QCONTROL_DYNAMICS_HPP
