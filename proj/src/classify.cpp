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

#include "qcontrol/classify.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace qcontrol {

const char* to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::full_u: return "full_u";
    case AlgebraTag::full_su: return "full_su";
    case AlgebraTag::orthogonal_so: return "orthogonal_so";
    case AlgebraTag::symplectic_sp: return "symplectic_sp";
    case AlgebraTag::other_subalgebra: return "other_subalgebra";
  }
  return "?";
}

const char* to_string(FormSymmetry s) {
  switch (s) {
    case FormSymmetry::symmetric: return "symmetric";
    case FormSymmetry::antisymmetric: return "antisymmetric";
    case FormSymmetry::none: return "none";
  }
  return "?";
}

namespace {

double max_constraint_residual(const LieAlgebraBasis& basis, const ComplexMatrix& j) {
  double worst = 0.0;
  for (const auto& x : basis.elements) {
    worst = std::max(worst, (x.transpose() * j + j * x).norm());
  }
  return worst;
}

// Largest-magnitude entry becomes exactly 1: deterministic scan in
// column-major order, first strict maximum wins.
void normalize_form(ComplexMatrix& j) {
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  for (Eigen::Index c = 0; c < j.cols(); ++c) {
    for (Eigen::Index r = 0; r < j.rows(); ++r) {
      const double a = std::abs(j(r, c));
      if (a > best) {
        best = a;
        bi = r;
        bj = c;
      }
    }
  }
  j /= j(bi, bj);
}

bool nondegenerate(const ComplexMatrix& j) {
  Eigen::JacobiSVD<ComplexMatrix> svd(j);
  const auto& s = svd.singularValues();
  return s(0) > 0.0 && s(s.size() - 1) >= 1e-8 * s(0);
}

}  // namespace

std::optional<InvariantForm> find_invariant_form(const LieAlgebraBasis& basis,
                                                 std::string* diagnostic) {
  if (basis.elements.empty()) {
    throw ValidationError("find_invariant_form: basis is empty");
  }
  const Eigen::Index n = basis.dim_space;
  const Eigen::Index nn = n * n;
  const Eigen::Index rows = static_cast<Eigen::Index>(basis.elements.size()) * nn;

  // Stack the linear maps J -> x^T J + J x, acting on vec(J) column-major.
  ComplexMatrix stack = ComplexMatrix::Zero(rows, nn);
  Eigen::Index base = 0;
  for (const auto& x : basis.elements) {
    for (Eigen::Index jcol = 0; jcol < n; ++jcol) {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < n; ++k) {
          stack(base + i + n * jcol, k + n * jcol) += x(k, i);   // (I (x) x^T) vec(J)
          stack(base + i + n * jcol, i + n * k) += x(k, jcol);   // (x^T (x) I) vec(J)
        }
      }
    }
    base += nn;
  }

  Eigen::JacobiSVD<ComplexMatrix> svd(stack, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(0) <= 0.0) {
    if (diagnostic) *diagnostic = "constraint matrix is zero";
    return std::nullopt;
  }
  int null_dim = 0;
  for (Eigen::Index c = sv.size() - 1; c >= 0 && sv(c) < 1e-8 * sv(0); --c) {
    ++null_dim;
  }
  if (null_dim == 0) {
    if (diagnostic) *diagnostic = "no invariant bilinear form (trivial null space)";
    return std::nullopt;
  }

  // Candidates in ascending singular value order; pick the nondegenerate one
  // whose symmetric/antisymmetric split is most decisive.
  ComplexMatrix best_j;
  double best_gap = -1.0;
  for (int c = 0; c < null_dim; ++c) {
    ComplexMatrix j = Eigen::Map<const ComplexMatrix>(
        svd.matrixV().col(sv.size() - 1 - c).data(), n, n);
    if (!nondegenerate(j)) {
      continue;
    }
    const double gap = std::abs(0.5 * (j + j.transpose()).norm() - 0.5 * (j - j.transpose()).norm());
    if (gap > best_gap) {
      best_gap = gap;
      best_j = std::move(j);
    }
  }
  if (best_j.size() == 0) {
    if (diagnostic) {
      *diagnostic = "every null-space direction is a degenerate matrix (null dim " +
                    std::to_string(null_dim) + ")";
    }
    return std::nullopt;
  }

  InvariantForm form;
  form.null_space_dim = null_dim;
  const ComplexMatrix sym = 0.5 * (best_j + best_j.transpose());
  const ComplexMatrix anti = 0.5 * (best_j - best_j.transpose());
  const double jn = best_j.norm();
  if (anti.norm() <= 1e-6 * jn) {
    form.symmetry = FormSymmetry::symmetric;
    best_j = sym;  // make the symmetry exact
  } else if (sym.norm() <= 1e-6 * jn) {
    form.symmetry = FormSymmetry::antisymmetric;
    best_j = anti;
  } else {
    form.symmetry = FormSymmetry::none;
    form.notes = "form has mixed symmetry; split is ambiguous";
  }
  normalize_form(best_j);
  if (!nondegenerate(best_j)) {
    if (diagnostic) *diagnostic = "form degenerated after symmetry projection";
    return std::nullopt;
  }
  form.j = std::move(best_j);
  form.residual = max_constraint_residual(basis, form.j);
  if (null_dim > 1) {
    form.notes += (form.notes.empty() ? "" : "; ");
    form.notes += "null space dimension " + std::to_string(null_dim) +
                  ", picked the direction with the most decisive symmetry split";
  }
  return form;
}

AlgebraClass classify_algebra(const LieAlgebraBasis& basis) {
  AlgebraClass cls;
  const Eigen::Index n = basis.dim_space;
  cls.dim = algebra_dimension(basis);
  if (cls.dim == 0) {
    cls.tag = AlgebraTag::other_subalgebra;
    cls.notes = "empty algebra";
    return cls;
  }
  if (cls.dim == n * n) {
    cls.tag = AlgebraTag::full_u;
    return cls;
  }
  if (cls.dim == n * n - 1 && !basis.contains_identity) {
    cls.tag = AlgebraTag::full_su;
    return cls;
  }

  std::string diagnostic;
  std::optional<InvariantForm> form = find_invariant_form(basis, &diagnostic);
  if (!form) {
    cls.tag = AlgebraTag::other_subalgebra;
    cls.notes = diagnostic;
    return cls;
  }
  if (form->symmetry == FormSymmetry::symmetric && cls.dim == n * (n - 1) / 2) {
    cls.tag = AlgebraTag::orthogonal_so;
    cls.form = std::move(form);
    return cls;
  }
  if (form->symmetry == FormSymmetry::antisymmetric && n % 2 == 0 &&
      cls.dim == (n / 2) * (n + 1)) {
    cls.tag = AlgebraTag::symplectic_sp;
    cls.form = std::move(form);
    return cls;
  }
  cls.tag = AlgebraTag::other_subalgebra;
  cls.notes = "invariant form found (" + std::string(to_string(form->symmetry)) +
              ") but dimension " + std::to_string(cls.dim) +
              " matches neither so(" + std::to_string(n) + ") nor sp(" + std::to_string(n / 2) +
              ")";
  cls.form = std::move(form);
  return cls;
}

ControllabilityVerdict controllability_verdict(const AlgebraClass& cls, Eigen::Index dim_space) {
  ControllabilityVerdict v;
  switch (cls.tag) {
    case AlgebraTag::full_u:
    case AlgebraTag::full_su:
      v.complete = true;
      v.pure_state = true;
      v.notes = "algebra spans all traceless generators: every unitary is reachable";
      break;
    case AlgebraTag::symplectic_sp:
      v.complete = false;
      v.pure_state = true;
      v.notes = "symplectic group acts transitively on the state sphere for even N=" +
                std::to_string(dim_space) + ", but not on mixed-state orbits";
      break;
    case AlgebraTag::orthogonal_so:
      v.complete = false;
      v.pure_state = false;
      v.notes = "orthogonal algebra preserves a real structure: states real in the "
                "adapted basis stay real, so even pure-state transfer is restricted";
      break;
    case AlgebraTag::other_subalgebra:
      v.complete = false;
      v.pure_state = false;
      v.notes = "unclassified proper subalgebra: pure-state controllability unknown, "
                "reported as false";
      break;
  }
  return v;
}

RealStructureCheck verify_real_structure(const LieAlgebraBasis& basis, const ComplexMatrix& u,
                                         const InvariantForm& form) {
  const Eigen::Index n = basis.dim_space;
  if (u.rows() != n || u.cols() != n) {
    throw ValidationError("verify_real_structure: U has wrong dimension");
  }
  const double unitarity = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm();
  if (unitarity > 1e-8) {
    throw ValidationError("verify_real_structure: U is not unitary (defect " +
                          std::to_string(unitarity) + ")");
  }
  if (form.symmetry != FormSymmetry::symmetric) {
    throw ValidationError("verify_real_structure: requires a symmetric form");
  }

  RealStructureCheck out;
  out.condition_holds = (u - u.conjugate() * form.j).norm() <= 1e-10 * std::max(1.0, u.norm());

  double max_imag = 0.0;
  double max_anti_defect = 0.0;
  for (const auto& x : basis.elements) {
    const ComplexMatrix b = u * x * u.adjoint();
    max_imag = std::max(max_imag, b.imag().cwiseAbs().maxCoeff());
    max_anti_defect = std::max(max_anti_defect, (b + b.transpose()).norm());
  }
  out.max_imag = max_imag;
  out.is_real_rep = max_imag <= 1e-9 && max_anti_defect <= 1e-9;
  return out;
}

}  // namespace qcontrol
