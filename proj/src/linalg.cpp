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

#include "qcontrol/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qcontrol {

namespace {

void require_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw ValidationError(std::string(what) + ": matrix must be square, got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.size() == 0) {
    throw ValidationError(std::string(what) + ": matrix is empty");
  }
  if (!m.allFinite()) {
    throw ValidationError(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.rows()) + " vs " + std::to_string(b.rows()) + ")");
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "HermitianMatrix");
  const double defect = (mat_ - mat_.adjoint()).norm();
  if (defect > structure_tolerance(mat_)) {
    throw ValidationError("HermitianMatrix: hermiticity defect " + std::to_string(defect) +
                          " exceeds tolerance");
  }
}

SkewHermitianMatrix::SkewHermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  require_square_finite(mat_, "SkewHermitianMatrix");
  const double defect = (mat_ + mat_.adjoint()).norm();
  if (defect > structure_tolerance(mat_)) {
    throw ValidationError("SkewHermitianMatrix: skewness defect " + std::to_string(defect) +
                          " exceeds tolerance");
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_finite(a, "commutator");
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

HermitianMatrix traceless_part(const HermitianMatrix& h) {
  const Eigen::Index n = h.dim();
  ComplexMatrix out = h.mat();
  const Complex shift = out.trace() / static_cast<double>(n);
  out -= shift * ComplexMatrix::Identity(n, n);
  return HermitianMatrix(std::move(out));
}

Eigensystem hermitian_eigensystem(const HermitianMatrix& h) {
  // Symmetrize before the solve so the result is independent of which half
  // of the (tolerance-level) defect the caller happened to store.
  const ComplexMatrix sym = 0.5 * (h.mat() + h.mat().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
  if (es.info() != Eigen::Success) {
    throw NumericError("hermitian_eigensystem: eigensolver did not converge");
  }
  Eigensystem out{es.eigenvalues(), es.eigenvectors()};
  // Fix each eigenvector's phase: first component above the noise floor
  // becomes real positive.
  for (Eigen::Index j = 0; j < out.vectors.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.vectors.rows(); ++i) {
      const Complex v = out.vectors(i, j);
      if (std::abs(v) > 1e-12) {
        out.vectors.col(j) *= std::conj(v) / std::abs(v);
        break;
      }
    }
  }
  return out;
}

ComplexMatrix expm_skew(const SkewHermitianMatrix& x) {
  return detail::expm_skew_unchecked(x.mat());
}

namespace detail {

ComplexMatrix expm_skew_unchecked(const ComplexMatrix& x) {
  const Eigen::Index n = x.rows();
  ComplexMatrix k = Complex(0.0, 1.0) * x;  // Hermitian
  k = 0.5 * (k + k.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(k);
  if (es.info() != Eigen::Success) {
    throw NumericError("expm_skew: eigensolver did not converge");
  }
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    phases[i] = std::exp(Complex(0.0, -es.eigenvalues()[i]));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

}  // namespace detail

}  // namespace qcontrol
