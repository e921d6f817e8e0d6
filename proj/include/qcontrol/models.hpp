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

#ifndef QCONTROL_MODELS_HPP
#define QCONTROL_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcontrol/linalg.hpp"

namespace qcontrol {

/// Bilinear control system H(t) = H0 + sum_m f_m(t) H_m on an N-level space.
struct ControlSystem {
  Eigen::Index dim;
  HermitianMatrix drift;
  std::vector<HermitianMatrix> controls;
  std::string label;

  ControlSystem(HermitianMatrix drift_in, std::vector<HermitianMatrix> controls_in,
                std::string label_in = {});
};

/// Compact description of an N-level ladder with nearest-neighbor dipole
/// coupling: drift = diag(energies), one tridiagonal control.
struct OscillatorSpec {
  RealVector energies;              // strictly increasing, length N
  RealVector dipoles;               // nonzero, length N-1
  std::optional<RealVector> signs;  // optional +-1 pattern, length N-1
};

ControlSystem build_oscillator(const OscillatorSpec& spec);

/// Equally spaced three-level ladder with unit dipoles; its dynamical
/// algebra is so(3).
ControlSystem three_level_so3();

/// Four-level ladder with +-paired energies and the (+d, +d, -d) coupling
/// pattern; its dynamical algebra is sp(2). Defaults give equal spacing.
ControlSystem four_level_sp2(double e1 = 1.5, double e2 = 0.5);

}  // namespace qcontrol

#endif  // QCONTROL_MODELS_HPP
