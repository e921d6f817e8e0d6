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

#include "qcontrol/models.hpp"

#include <cmath>
#include <utility>

namespace qcontrol {

ControlSystem::ControlSystem(HermitianMatrix drift_in, std::vector<HermitianMatrix> controls_in,
                             std::string label_in)
    : dim(drift_in.dim()), drift(std::move(drift_in)), controls(std::move(controls_in)),
      label(std::move(label_in)) {
  if (dim < 2) {
    throw ValidationError("ControlSystem: dimension must be at least 2");
  }
  if (controls.empty()) {
    throw ValidationError("ControlSystem: at least one control Hamiltonian required");
  }
  for (const auto& c : controls) {
    if (c.dim() != dim) {
      throw ValidationError("ControlSystem: control dimension " + std::to_string(c.dim()) +
                            " does not match drift dimension " + std::to_string(dim));
    }
  }
}

ControlSystem build_oscillator(const OscillatorSpec& spec) {
  const Eigen::Index n = spec.energies.size();
  if (n < 2) {
    throw ValidationError("build_oscillator: need at least two levels");
  }
  if (spec.dipoles.size() != n - 1) {
    throw ValidationError("build_oscillator: expected " + std::to_string(n - 1) +
                          " dipole moments, got " + std::to_string(spec.dipoles.size()));
  }
  if (spec.signs && spec.signs->size() != n - 1) {
    throw ValidationError("build_oscillator: sign pattern length must be " +
                          std::to_string(n - 1));
  }
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    if (!(spec.energies[i] < spec.energies[i + 1])) {
      throw ValidationError("build_oscillator: energies must be strictly increasing");
    }
  }
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    if (spec.dipoles[i] == 0.0) {
      throw ValidationError("build_oscillator: dipole moments must be nonzero");
    }
  }

  ComplexMatrix h0 = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    h0(i, i) = spec.energies[i];
  }
  ComplexMatrix h1 = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    const double s = spec.signs ? (*spec.signs)[i] : 1.0;
    h1(i, i + 1) = s * spec.dipoles[i];
    h1(i + 1, i) = s * spec.dipoles[i];
  }
  return ControlSystem(HermitianMatrix(std::move(h0)), {HermitianMatrix(std::move(h1))},
                       std::to_string(n) + "-level dipole chain");
}

ControlSystem three_level_so3() {
  OscillatorSpec spec;
  spec.energies = RealVector{{-1.0, 0.0, 1.0}};
  spec.dipoles = RealVector{{1.0, 1.0}};
  ControlSystem sys = build_oscillator(spec);
  sys.label = "three-level dipole chain (so(3))";
  return sys;
}

ControlSystem four_level_sp2(double e1, double e2) {
  if (!(e1 > e2 && e2 > 0.0)) {
    throw ValidationError("four_level_sp2: requires e1 > e2 > 0");
  }
  OscillatorSpec spec;
  spec.energies = RealVector{{-e1, -e2, e2, e1}};
  spec.dipoles = RealVector{{1.0, 1.0, 1.0}};
  spec.signs = RealVector{{1.0, 1.0, -1.0}};
  ControlSystem sys = build_oscillator(spec);
  sys.label = "four-level dipole chain (sp(2))";
  return sys;
}

}  // namespace qcontrol
