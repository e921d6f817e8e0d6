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

#include "qcontrol/density.hpp"

#include <cmath>

namespace qcontrol {

DensityMatrix::DensityMatrix(const HermitianMatrix& h) : mat_(h.mat()) {
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > 1e-10) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(trace) + " is not 1");
  }
  eigenvalues_ = hermitian_eigensystem(h).values;
  if (eigenvalues_(0) < -1e-10) {
    throw ValidationError("DensityMatrix: negative eigenvalue " +
                          std::to_string(eigenvalues_(0)));
  }
}

StateDecomposition decompose_state(const DensityMatrix& rho) {
  const Eigen::Index n = rho.dim();
  const double alpha = rho.mat().trace().real() / static_cast<double>(n);
  // Symmetrize so x comes out exactly skew-Hermitian; i*x = rho - alpha*I.
  ComplexMatrix herm = 0.5 * (rho.mat() + rho.mat().adjoint());
  herm -= alpha * ComplexMatrix::Identity(n, n);
  ComplexMatrix x = Complex(0.0, -1.0) * herm;
  return {alpha, SkewHermitianMatrix(std::move(x))};
}

bool kinematically_admissible(const DensityMatrix& r0, const DensityMatrix& r1) {
  if (r0.dim() != r1.dim()) {
    throw ValidationError("kinematically_admissible: dimension mismatch");
  }
  return (r0.eigenvalues() - r1.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-8;
}

FormConstraint form_constraint_check(const StateDecomposition& d, const InvariantForm& form) {
  const ComplexMatrix& x = d.x.mat();
  if (x.rows() != form.j.rows()) {
    throw ValidationError("form_constraint_check: dimension mismatch with form");
  }
  FormConstraint out;
  out.residual = (x.transpose() * form.j + form.j * x).norm();
  const double scale = hs_norm(x);
  out.holds = scale == 0.0 ? true : out.residual <= 1e-8 * scale;
  return out;
}

}  // namespace qcontrol
