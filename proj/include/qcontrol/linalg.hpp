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

#ifndef QCONTROL_LINALG_HPP
#define QCONTROL_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "qcontrol/errors.hpp"

namespace qcontrol {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Relative tolerance used when accepting a matrix as (skew-)Hermitian:
/// the defect must satisfy ||defect||_F <= structure_tolerance(M).
inline double structure_tolerance(const ComplexMatrix& m) {
  return 1e-10 * std::max(1.0, m.norm());
}

/// Hermitian matrix with the structural invariant checked at construction.
/// Units: hbar = 1 throughout; all energies and times dimensionless.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m);
  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Skew-Hermitian matrix (M + M^dag ~ 0), the raw material of the
/// dynamical Lie algebra.
class SkewHermitianMatrix {
 public:
  explicit SkewHermitianMatrix(ComplexMatrix m);
  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// [A, B] = AB - BA. Skew-Hermitian inputs give a skew-Hermitian result.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product trace(A^dag B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius / Hilbert-Schmidt norm.
inline double hs_norm(const ComplexMatrix& a) { return a.norm(); }

/// H - (trace(H)/N) I.
HermitianMatrix traceless_part(const HermitianMatrix& h);

struct Eigensystem {
  RealVector values;       // ascending
  ComplexMatrix vectors;   // unitary, column k pairs with values[k]
};

/// Spectral decomposition H = V diag(values) V^dag. Eigenvalues ascending;
/// each eigenvector's first nonzero component is rotated to be real
/// positive so repeated runs produce identical output.
Eigensystem hermitian_eigensystem(const HermitianMatrix& h);

/// exp(X) for skew-Hermitian X, computed from the eigendecomposition of the
/// Hermitian matrix iX so the reconstruction is unitary up to roundoff.
ComplexMatrix expm_skew(const SkewHermitianMatrix& x);

namespace detail {
/// expm_skew without the structural check, for optimizer inner loops where
/// the input is skew-Hermitian by construction.
ComplexMatrix expm_skew_unchecked(const ComplexMatrix& x);
/// trace(A * B) in O(N^2).
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);
}  // namespace detail

}  // namespace qcontrol

#endif  // QCONTROL_LINALG_HPP
