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

#include "qcontrol/dynamics.hpp"

#include <cmath>

namespace qcontrol {

namespace {

ComplexMatrix step_generator(const ControlSystem& system, const ControlPulse& pulse,
                             Eigen::Index k, double dt) {
  ComplexMatrix h = system.drift.mat();
  for (Eigen::Index m = 0; m < pulse.num_controls(); ++m) {
    h.noalias() += pulse.amplitudes(k, m) * system.controls[static_cast<std::size_t>(m)].mat();
  }
  return Complex(0.0, -dt) * h;  // skew-Hermitian
}

}  // namespace

ControlPulse::ControlPulse(double duration_in, Eigen::Index steps_in,
                           Eigen::MatrixXd amplitudes_in)
    : duration(duration_in), steps(steps_in), amplitudes(std::move(amplitudes_in)) {
  if (!(duration >= 0.0)) {
    throw ValidationError("ControlPulse: duration must be nonnegative");
  }
  if (steps < 1) {
    throw ValidationError("ControlPulse: need at least one step");
  }
  if (amplitudes.rows() != steps) {
    throw ValidationError("ControlPulse: amplitude rows " + std::to_string(amplitudes.rows()) +
                          " do not match steps " + std::to_string(steps));
  }
  if (amplitudes.cols() < 1) {
    throw ValidationError("ControlPulse: need at least one control column");
  }
  if (!amplitudes.allFinite()) {
    throw ValidationError("ControlPulse: non-finite amplitude");
  }
}

ControlPulse ControlPulse::zero(double duration, Eigen::Index steps, Eigen::Index num_controls) {
  return ControlPulse(duration, steps, Eigen::MatrixXd::Zero(steps, num_controls));
}

PropagationResult propagate(const ControlSystem& system, const ControlPulse& pulse,
                            const PropagateOptions& opts) {
  if (pulse.num_controls() != static_cast<Eigen::Index>(system.controls.size())) {
    throw ValidationError("propagate: pulse has " + std::to_string(pulse.num_controls()) +
                          " control columns, system has " +
                          std::to_string(system.controls.size()));
  }
  const Eigen::Index n = system.dim;
  const Eigen::Index steps = pulse.steps;
  const double dt = pulse.duration / static_cast<double>(steps);

  // Step factors are independent; the ordered product below is what carries
  // the time ordering.
  std::vector<ComplexMatrix> factors(static_cast<std::size_t>(steps));
  if (opts.parallel) {
#pragma omp parallel for schedule(static)
    for (Eigen::Index k = 0; k < steps; ++k) {
      factors[static_cast<std::size_t>(k)] =
          detail::expm_skew_unchecked(step_generator(system, pulse, k, dt));
    }
  } else {
    for (Eigen::Index k = 0; k < steps; ++k) {
      factors[static_cast<std::size_t>(k)] =
          detail::expm_skew_unchecked(step_generator(system, pulse, k, dt));
    }
  }

  PropagationResult result;
  if (opts.keep_intermediates) {
    result.intermediate_unitaries.reserve(static_cast<std::size_t>(steps));
  }
  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < steps; ++k) {
    u = (factors[static_cast<std::size_t>(k)] * u).eval();
    if (opts.keep_intermediates) {
      result.intermediate_unitaries.push_back(u);
    }
  }
  result.unitarity_defect = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
  result.final_unitary = std::move(u);
  return result;
}

DensityMatrix evolve_density(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw ValidationError("evolve_density: unitary dimension mismatch");
  }
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  if (defect > 1e-8) {
    throw ValidationError("evolve_density: matrix is not unitary (defect " +
                          std::to_string(defect) + ")");
  }
  ComplexMatrix evolved = u * rho.mat() * u.adjoint();
  // Conjugation preserves hermiticity only up to roundoff; symmetrize so the
  // invariant checks in DensityMatrix see the exact structure.
  evolved = 0.5 * (evolved + evolved.adjoint()).eval();
  return DensityMatrix(HermitianMatrix(std::move(evolved)));
}

double expectation(const HermitianMatrix& a, const DensityMatrix& rho) {
  if (a.dim() != rho.dim()) {
    throw ValidationError("expectation: dimension mismatch");
  }
  return detail::trace_product(a.mat(), rho.mat()).real();
}

namespace reference {

ComplexMatrix propagate(const ControlSystem& system, const ControlPulse& pulse) {
  if (pulse.num_controls() != static_cast<Eigen::Index>(system.controls.size())) {
    throw ValidationError("reference::propagate: control count mismatch");
  }
  const double dt = pulse.duration / static_cast<double>(pulse.steps);
  ComplexMatrix u = ComplexMatrix::Identity(system.dim, system.dim);
  for (Eigen::Index k = 0; k < pulse.steps; ++k) {
    u = (detail::expm_skew_unchecked(step_generator(system, pulse, k, dt)) * u).eval();
  }
  return u;
}

}  // namespace reference

}  // namespace qcontrol
