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

#include "qcontrol/lie_closure.hpp"

#include <cmath>

namespace qcontrol {

namespace {

// Subtract the span of `basis` from x. The Hilbert-Schmidt inner product is
// real on the skew-Hermitian subspace, so only the real part of each
// coefficient is used; this keeps residuals exactly skew-Hermitian.
ComplexMatrix project_out(const std::vector<ComplexMatrix>& basis, ComplexMatrix x) {
  for (const auto& e : basis) {
    const double coeff = hs_inner(e, x).real();
    x.noalias() -= coeff * e;
  }
  return x;
}

struct ClosureState {
  std::vector<ComplexMatrix> elements;
  std::vector<GenerationRecord> log;
  bool warning = false;
  double tolerance = 0.0;
};

// Breadth-first commutator closure over an orthonormalized seed set.
// Element q is commutated against every earlier element p in index order, so
// the pair sequence matches discovery (FIFO) order and the result is
// reproducible element for element.
ClosureState closure_engine(const std::vector<ComplexMatrix>& generators, double tolerance_scale,
                            Eigen::Index cap) {
  ClosureState st;

  double log_sum = 0.0;
  int nonzero = 0;
  for (const auto& g : generators) {
    const double norm = hs_norm(g);
    if (norm > 1e-14) {
      log_sum += std::log(norm);
      ++nonzero;
    }
  }
  if (nonzero == 0) {
    return st;
  }
  st.tolerance = tolerance_scale * 1e-8 * std::exp(log_sum / nonzero);

  for (std::size_t j = 0; j < generators.size(); ++j) {
    const auto& g = generators[j];
    const double norm = hs_norm(g);
    if (norm <= 1e-14) {
      continue;
    }
    ComplexMatrix r = project_out(st.elements, g);
    const double rnorm = hs_norm(r);
    if (rnorm / norm > st.tolerance) {
      r = project_out(st.elements, std::move(r));  // re-orthogonalization pass
      st.elements.push_back(r / hs_norm(r));
      st.log.push_back({-1, static_cast<int>(j), rnorm / norm});
    }
  }

  for (std::size_t q = 1; q < st.elements.size(); ++q) {
    if (static_cast<Eigen::Index>(st.elements.size()) >= cap) {
      break;
    }
    for (std::size_t p = 0; p < q; ++p) {
      // parents are unit norm, so the candidate is already parent-normalized
      ComplexMatrix c = commutator(st.elements[p], st.elements[q]);
      ComplexMatrix r = project_out(st.elements, std::move(c));
      const double rnorm = hs_norm(r);
      if (rnorm > st.tolerance) {
        if (rnorm < 10.0 * st.tolerance) {
          st.warning = true;
        }
        r = project_out(st.elements, std::move(r));
        st.elements.push_back(r / hs_norm(r));
        st.log.push_back({static_cast<int>(p), static_cast<int>(q), rnorm});
        if (static_cast<Eigen::Index>(st.elements.size()) >= cap) {
          break;
        }
      }
    }
  }
  return st;
}

}  // namespace

std::pair<SkewHermitianMatrix, double> project_residual(const LieAlgebraBasis& basis,
                                                        const SkewHermitianMatrix& x) {
  if (!basis.elements.empty() && basis.elements.front().rows() != x.dim()) {
    throw ValidationError("project_residual: dimension mismatch with basis");
  }
  ComplexMatrix r = project_out(basis.elements, x.mat());
  double norm = hs_norm(r);
  if (norm < 1e-4 * hs_norm(x.mat())) {
    r = project_out(basis.elements, std::move(r));
    norm = hs_norm(r);
  }
  return {SkewHermitianMatrix(std::move(r)), norm};
}

LieAlgebraBasis generate_dynamical_algebra(const ControlSystem& system,
                                           const ClosureOptions& opts) {
  const Eigen::Index n = system.dim;
  const Eigen::Index cap = opts.max_elements > 0 ? opts.max_elements : n * n;
  const Complex i_unit(0.0, 1.0);

  std::vector<ComplexMatrix> traceless_gens;
  std::vector<ComplexMatrix> raw_gens;
  traceless_gens.push_back(i_unit * traceless_part(system.drift).mat());
  raw_gens.push_back(i_unit * system.drift.mat());
  for (const auto& c : system.controls) {
    traceless_gens.push_back(i_unit * traceless_part(c).mat());
    raw_gens.push_back(i_unit * c.mat());
  }

  ClosureState core = closure_engine(traceless_gens, opts.tolerance_scale, cap);

  // The identity direction is central, so it never shows up in commutators;
  // it belongs to the algebra iff the closure of the *raw* generators spans
  // i*I.
  ClosureState raw = closure_engine(raw_gens, opts.tolerance_scale, cap);
  ComplexMatrix z = (i_unit / std::sqrt(static_cast<double>(n))) * ComplexMatrix::Identity(n, n);
  const double z_residual = hs_norm(project_out(raw.elements, z));
  const bool has_identity = z_residual < 1e-8;

  LieAlgebraBasis basis;
  basis.dim_space = n;
  basis.elements = std::move(core.elements);
  basis.generation_log = std::move(core.log);
  basis.tolerance_warning = core.warning || raw.warning;
  basis.closure_tolerance = core.tolerance;
  basis.contains_identity = has_identity;
  if (has_identity && static_cast<Eigen::Index>(basis.elements.size()) < cap) {
    basis.elements.push_back(std::move(z));
  }
  return basis;
}

}  // namespace qcontrol
