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

#ifndef QCONTROL_CLASSIFY_HPP
#define QCONTROL_CLASSIFY_HPP

#include <optional>
#include <string>

#include "qcontrol/lie_closure.hpp"

namespace qcontrol {

enum class FormSymmetry { symmetric, antisymmetric, none };

/// Nondegenerate J with x^T J + J x = 0 for every basis element x.
/// Symmetric J signals an orthogonal-type algebra, antisymmetric a
/// symplectic one.
struct InvariantForm {
  ComplexMatrix j;          // normalized: largest-magnitude entry = 1
  FormSymmetry symmetry = FormSymmetry::none;
  double residual = 0.0;    // max over basis of ||x^T J + J x||_F
  int null_space_dim = 0;
  std::string notes;
};

enum class AlgebraTag { full_u, full_su, orthogonal_so, symplectic_sp, other_subalgebra };

const char* to_string(AlgebraTag tag);
const char* to_string(FormSymmetry s);

struct AlgebraClass {
  AlgebraTag tag = AlgebraTag::other_subalgebra;
  Eigen::Index dim = 0;
  std::optional<InvariantForm> form;
  std::string notes;
};

struct ControllabilityVerdict {
  bool complete = false;
  bool pure_state = false;
  std::string notes;
};

/// Solves the stacked linear system {x^T J + J x = 0 : x in basis} for J by
/// SVD null-space extraction. Returns nothing when the null space is trivial
/// or every null direction is a degenerate matrix; `diagnostic`, when given,
/// receives the reason.
std::optional<InvariantForm> find_invariant_form(const LieAlgebraBasis& basis,
                                                 std::string* diagnostic = nullptr);

/// Dimension tests first (N^2 -> full_u, N^2-1 without identity -> full_su),
/// then invariant-form evidence; inconsistent evidence degrades to
/// other_subalgebra, never to a false positive tag.
AlgebraClass classify_algebra(const LieAlgebraBasis& basis);

ControllabilityVerdict controllability_verdict(const AlgebraClass& cls, Eigen::Index dim_space);

struct RealStructureCheck {
  bool is_real_rep = false;     // every U x U^dag real antisymmetric
  double max_imag = 0.0;        // worst imaginary entry over the basis images
  bool condition_holds = false; // ||U - conj(U) J||_F small
};

/// Checks that conjugation by U carries the algebra to real antisymmetric
/// matrices, and the sufficient condition U = conj(U) J. U must be unitary,
/// J symmetric.
RealStructureCheck verify_real_structure(const LieAlgebraBasis& basis, const ComplexMatrix& u,
                                         const InvariantForm& form);

}  // namespace qcontrol

#endif  // QCONTROL_CLASSIFY_HPP
