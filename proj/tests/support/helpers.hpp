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

#ifndef QCONTROL_TESTS_HELPERS_HPP
#define QCONTROL_TESTS_HELPERS_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <vector>

#include "qcontrol/detail/multistart.hpp"
#include "qcontrol/linalg.hpp"

namespace qctest {

using qcontrol::Complex;
using qcontrol::ComplexMatrix;
using Rng = qcontrol::detail::Rng;

inline const Complex kI{0.0, 1.0};

// --- canonical matrices used across suites ---

inline ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Anti-diagonal symmetric form fixed by the three-level chain.
inline ComplexMatrix form_so3() {
  ComplexMatrix j = ComplexMatrix::Zero(3, 3);
  j(0, 2) = 1;
  j(1, 1) = -1;
  j(2, 0) = 1;
  return j;
}

// Anti-diagonal antisymmetric form fixed by the four-level chain.
inline ComplexMatrix form_sp2() {
  ComplexMatrix j = ComplexMatrix::Zero(4, 4);
  j(0, 3) = 1;
  j(1, 2) = 1;
  j(2, 1) = -1;
  j(3, 0) = -1;
  return j;
}

// Basis change carrying the three-level algebra to real antisymmetric form.
inline ComplexMatrix real_structure_unitary() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix u = ComplexMatrix::Zero(3, 3);
  u(0, 0) = s;
  u(0, 2) = s;
  u(1, 0) = kI * s;
  u(1, 2) = -kI * s;
  u(2, 1) = kI;
  return u;
}

inline ComplexMatrix diag4(double a, double b, double c, double d) {
  return Eigen::Vector4cd(a, b, c, d).asDiagonal();
}

inline ComplexMatrix rho0_4level() { return diag4(0.35, 0.30, 0.20, 0.15); }
inline ComplexMatrix rho1_4level() { return diag4(0.30, 0.35, 0.20, 0.15); }
inline ComplexMatrix rho2_4level() { return diag4(0.15, 0.20, 0.30, 0.35); }

// --- random generators (deterministic via detail::Rng) ---

inline ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n) {
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = Complex(rng.normal(), 0.0);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Complex v(rng.normal(), rng.normal());
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

inline ComplexMatrix random_traceless_hermitian(Rng& rng, Eigen::Index n) {
  ComplexMatrix m = random_hermitian(rng, n);
  m -= (m.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
  return m;
}

inline ComplexMatrix random_skew_hermitian(Rng& rng, Eigen::Index n) {
  return kI * random_hermitian(rng, n);
}

inline ComplexMatrix random_density(Rng& rng, Eigen::Index n) {
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  ComplexMatrix p = a * a.adjoint();
  p /= p.trace().real();
  return 0.5 * (p + p.adjoint());
}

inline ComplexMatrix random_unitary(Rng& rng, Eigen::Index n) {
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= (std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0));
  }
  return q;
}

// --- independent oracles ---

// Lie-closure dimension by SVD rank of stacked vectorized elements; shares
// nothing with the Gram-Schmidt engine under test.
inline int closure_dim_svd_oracle(std::vector<ComplexMatrix> gens, double rank_tol = 1e-9) {
  const Eigen::Index n = gens.front().rows();
  const auto orthonormal_rows = [&](const std::vector<ComplexMatrix>& mats) {
    Eigen::MatrixXcd stack(static_cast<Eigen::Index>(mats.size()), n * n);
    for (std::size_t r = 0; r < mats.size(); ++r) {
      stack.row(static_cast<Eigen::Index>(r)) =
          Eigen::Map<const Eigen::VectorXcd>(mats[r].data(), n * n).transpose() /
          std::max(mats[r].norm(), 1e-300);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stack, Eigen::ComputeThinV);
    std::vector<ComplexMatrix> basis;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
      if (svd.singularValues()(k) > rank_tol * svd.singularValues()(0)) {
        Eigen::VectorXcd v = svd.matrixV().col(k).conjugate();
        basis.push_back(Eigen::Map<ComplexMatrix>(v.data(), n, n));
      }
    }
    return basis;
  };

  std::vector<ComplexMatrix> basis = orthonormal_rows(gens);
  for (int round = 0; round < 2 * n * n; ++round) {
    std::vector<ComplexMatrix> all = basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        ComplexMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
        if (c.norm() > 1e-12) {
          all.push_back(std::move(c));
        }
      }
    }
    std::vector<ComplexMatrix> next = orthonormal_rows(all);
    if (next.size() == basis.size()) {
      return static_cast<int>(basis.size());
    }
    basis = std::move(next);
  }
  return static_cast<int>(basis.size());
}

// Exhaustive rearrangement maximum of sum_i a_i r_{pi(i)}.
inline double brute_force_pairing_max(Eigen::VectorXd a, Eigen::VectorXd r) {
  std::vector<int> idx(static_cast<std::size_t>(a.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = static_cast<int>(i);
  }
  std::sort(idx.begin(), idx.end());
  double best = -1e300;
  do {
    double v = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      v += a[static_cast<Eigen::Index>(i)] * r[idx[i]];
    }
    best = std::max(best, v);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

// Distance from a diagonal density matrix to the set of diagonal matrices
// whose pairwise sums match 2*alpha under the anti-diagonal pairing: the
// closed-form projection, used as the obstruction-floor oracle.
inline double diagonal_constraint_floor(const Eigen::VectorXd& target, double alpha) {
  const Eigen::Index n = target.size();
  double dist2 = 0.0;
  for (Eigen::Index i = 0; i < n / 2; ++i) {
    const double a = target[i];
    const double b = target[n - 1 - i];
    const double shift = (2.0 * alpha - a - b) / 2.0;
    dist2 += 2.0 * shift * shift;
  }
  return std::sqrt(dist2);
}

}  // namespace qctest

#endif  // QCONTROL_TESTS_HELPERS_HPP
