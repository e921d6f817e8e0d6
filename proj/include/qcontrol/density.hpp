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

#ifndef QCONTROL_DENSITY_HPP
#define QCONTROL_DENSITY_HPP

#include "qcontrol/classify.hpp"
#include "qcontrol/linalg.hpp"

namespace qcontrol {

/// Hermitian, positive-semidefinite, unit-trace state. Trace must be 1
/// within 1e-10 and eigenvalues >= -1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(const HermitianMatrix& h);
  explicit DensityMatrix(ComplexMatrix m) : DensityMatrix(HermitianMatrix(std::move(m))) {}

  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  /// Spectrum, ascending.
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  ComplexMatrix mat_;
  RealVector eigenvalues_;
};

/// rho = i*x + alpha*I with x skew-Hermitian and alpha = trace(rho)/N.
struct StateDecomposition {
  double alpha;
  SkewHermitianMatrix x;
};

StateDecomposition decompose_state(const DensityMatrix& rho);

/// True iff the sorted spectra agree entrywise within 1e-8, i.e. the states
/// are related by *some* unitary conjugation.
bool kinematically_admissible(const DensityMatrix& r0, const DensityMatrix& r1);

struct FormConstraint {
  bool holds = false;
  double residual = 0.0;  // ||x^T J + J x||_F
};

/// Evaluates the defining relation of the invariant form on the state's
/// skew-Hermitian part; holds iff residual <= 1e-8 * ||x|| (x = 0 holds).
FormConstraint form_constraint_check(const StateDecomposition& d, const InvariantForm& form);

}  // namespace qcontrol

#endif  // QCONTROL_DENSITY_HPP
