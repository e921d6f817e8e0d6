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

#include "qcontrol/reachability.hpp"

#include <cmath>

#include "qcontrol/detail/multistart.hpp"

namespace qcontrol {

const char* to_string(Reachability r) {
  switch (r) {
    case Reachability::reachable_numeric: return "reachable_numeric";
    case Reachability::excluded_by_form: return "excluded_by_form";
    case Reachability::excluded_kinematic: return "excluded_kinematic";
    case Reachability::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

constexpr double kReachableTolerance = 1e-6;  // Frobenius distance for reachable_numeric

ComplexMatrix algebra_element(const LieAlgebraBasis& basis, const Eigen::VectorXd& coeffs) {
  ComplexMatrix x = ComplexMatrix::Zero(basis.dim_space, basis.dim_space);
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    x.noalias() += coeffs[k] * basis.elements[static_cast<std::size_t>(k)];
  }
  return x;
}

OrbitSearchResult run_orbit_search(const LieAlgebraBasis& basis, const DensityMatrix& r0,
                                   const DensityMatrix& r1, const SearchOptions& opts,
                                   bool parallel) {
  if (basis.elements.empty()) {
    throw ValidationError("orbit_search: empty basis");
  }
  if (r0.dim() != basis.dim_space || r1.dim() != basis.dim_space) {
    throw ValidationError("orbit_search: state dimension does not match basis");
  }
  const Eigen::Index dim = algebra_dimension(basis);
  const ComplexMatrix& rho0 = r0.mat();
  const ComplexMatrix& rho1 = r1.mat();

  const detail::Objective f = [&](const Eigen::VectorXd& c) {
    const ComplexMatrix u = detail::expm_skew_unchecked(algebra_element(basis, c));
    return (u * rho0 * u.adjoint() - rho1).squaredNorm();
  };
  const detail::Sampler sampler = [dim](detail::Rng& rng) {
    Eigen::VectorXd x(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      x[k] = rng.uniform(-M_PI, M_PI);
    }
    return x;
  };
  detail::GdOptions gd;
  gd.learning_rate = opts.learning_rate;
  gd.fd_step = opts.fd_step;
  gd.grad_tol = opts.grad_tol;
  gd.max_iters = opts.max_iters;

  const detail::MultistartResult ms = detail::multistart_minimize(
      f, detail::Gradient{}, dim, sampler, opts.seed, opts.restarts, gd, parallel);

  OrbitSearchResult out;
  out.best_distance = std::sqrt(std::max(0.0, ms.best.value));
  out.best_coeffs = ms.best.x;
  out.best_restart = ms.best_restart;
  out.converged = ms.best.converged;
  out.iterations = ms.best.iterations;
  return out;
}

}  // namespace

OrbitSearchResult orbit_search(const LieAlgebraBasis& basis, const DensityMatrix& r0,
                               const DensityMatrix& r1, const SearchOptions& opts) {
  return run_orbit_search(basis, r0, r1, opts, opts.parallel);
}

namespace reference {

OrbitSearchResult orbit_search(const LieAlgebraBasis& basis, const DensityMatrix& r0,
                               const DensityMatrix& r1, SearchOptions opts) {
  return run_orbit_search(basis, r0, r1, opts, /*parallel=*/false);
}

}  // namespace reference

ReachabilityVerdict reachable_verdict(const ControlSystem& system, const DensityMatrix& r0,
                                      const DensityMatrix& r1, const SearchOptions& opts) {
  ReachabilityVerdict v;
  v.seed = opts.seed;

  v.kinematic = kinematically_admissible(r0, r1);
  if (!v.kinematic) {
    v.verdict = Reachability::excluded_kinematic;
    v.notes = "spectra differ: no unitary relates the states";
    return v;
  }

  const LieAlgebraBasis basis = generate_dynamical_algebra(system);
  const AlgebraClass cls = classify_algebra(basis);
  std::optional<InvariantForm> form = cls.form;
  if (!form && cls.tag == AlgebraTag::other_subalgebra) {
    // A form may exist even when the tag stayed generic.
    form = find_invariant_form(basis);
  }
  if (form && form->symmetry != FormSymmetry::none) {
    const FormConstraint c0 = form_constraint_check(decompose_state(r0), *form);
    const FormConstraint c1 = form_constraint_check(decompose_state(r1), *form);
    v.form_residual_from = c0.residual;
    v.form_residual_to = c1.residual;
    v.form_necessary = !(c0.holds != c1.holds);
    if (c0.holds != c1.holds) {
      v.verdict = Reachability::excluded_by_form;
      v.notes = std::string("invariant-form constraint separates the states (") +
                (c0.holds ? "target" : "source") + " side violates it)";
      return v;
    }
  }

  const OrbitSearchResult search = orbit_search(basis, r0, r1, opts);
  v.orbit_distance = search.best_distance;
  if (search.best_distance <= kReachableTolerance) {
    v.verdict = Reachability::reachable_numeric;
    v.notes = "orbit search found a unitary in the dynamical group reaching the target";
  } else {
    v.verdict = Reachability::inconclusive;
    v.notes = "no obstruction found, but the orbit search did not reach the target "
              "(best distance " + std::to_string(search.best_distance) + ")";
  }
  return v;
}

}  // namespace qcontrol
