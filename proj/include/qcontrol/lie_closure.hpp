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

#ifndef QCONTROL_LIE_CLOSURE_HPP
#define QCONTROL_LIE_CLOSURE_HPP

#include <utility>
#include <vector>

#include "qcontrol/models.hpp"

namespace qcontrol {

struct ClosureOptions {
  /// Multiplies the base acceptance threshold 1e-8 * geomean(generator norms).
  double tolerance_scale = 1.0;
  /// Hard cap on basis size; 0 means N^2.
  Eigen::Index max_elements = 0;
};

/// One accepted element: seeds carry parent_i = -1 and parent_j = generator
/// index; commutator-born elements carry the basis indices of their parents.
struct GenerationRecord {
  int parent_i;
  int parent_j;
  double residual_norm;
};

/// Hilbert-Schmidt-orthonormal basis of the dynamical Lie algebra. Elements
/// are traceless skew-Hermitian; when the raw generators span i*I the
/// normalized identity direction is appended as the last element and
/// contains_identity is set.
struct LieAlgebraBasis {
  Eigen::Index dim_space = 0;
  std::vector<ComplexMatrix> elements;
  bool contains_identity = false;
  std::vector<GenerationRecord> generation_log;
  /// Set when some element was accepted with a residual within 10x of the
  /// closure tolerance (rank decision is then ill-conditioned).
  bool tolerance_warning = false;
  double closure_tolerance = 0.0;
};

/// X minus its projection onto span(basis), and the Hilbert-Schmidt norm of
/// that residual.
std::pair<SkewHermitianMatrix, double> project_residual(const LieAlgebraBasis& basis,
                                                        const SkewHermitianMatrix& x);

/// Breadth-first commutator closure of {i*traceless(H0), i*traceless(H1), ...}
/// with Gram-Schmidt rank control. Deterministic: generators in input order,
/// candidate pairs in discovery order.
LieAlgebraBasis generate_dynamical_algebra(const ControlSystem& system,
                                           const ClosureOptions& opts = {});

inline Eigen::Index algebra_dimension(const LieAlgebraBasis& basis) {
  return static_cast<Eigen::Index>(basis.elements.size());
}

}  // namespace qcontrol

#endif  // QCONTROL_LIE_CLOSURE_HPP
