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

#include "qcontrol/optimizer.hpp"

#include <cmath>

#include "qcontrol/detail/multistart.hpp"

namespace qcontrol {

double kinematical_bound(const HermitianMatrix& a, const DensityMatrix& rho0) {
  if (a.dim() != rho0.dim()) {
    throw ValidationError("kinematical_bound: dimension mismatch");
  }
  const RealVector a_eigs = hermitian_eigensystem(a).values;  // ascending
  const RealVector& r_eigs = rho0.eigenvalues();              // ascending
  return a_eigs.dot(r_eigs);
}

namespace {

// Pulse objective trace(A U rho0 U^dag) over flattened amplitudes
// (row-major: index k*M + m). The gradient uses central finite differences
// but re-exponentiates only the perturbed step, sandwiched between cached
// prefix and suffix products.
class PulseProblem {
 public:
  PulseProblem(const ControlSystem& system, const DensityMatrix& rho0, const HermitianMatrix& a,
               Eigen::Index steps, double duration, double fd_step)
      : system_(system), rho0_(rho0.mat()), a_(a.mat()), steps_(steps),
        num_controls_(static_cast<Eigen::Index>(system.controls.size())),
        dt_(duration / static_cast<double>(steps)), fd_step_(fd_step) {}

  Eigen::Index dim() const { return steps_ * num_controls_; }

  ComplexMatrix step_unitary(const Eigen::VectorXd& flat, Eigen::Index k, Eigen::Index bump_m,
                             double bump) const {
    ComplexMatrix h = system_.drift.mat();
    for (Eigen::Index m = 0; m < num_controls_; ++m) {
      double f = flat[k * num_controls_ + m];
      if (m == bump_m) {
        f += bump;
      }
      h.noalias() += f * system_.controls[static_cast<std::size_t>(m)].mat();
    }
    return detail::expm_skew_unchecked((Complex(0.0, -dt_) * h).eval());
  }

  double value_of_unitary(const ComplexMatrix& u) const {
    return detail::trace_product(a_, (u * rho0_ * u.adjoint()).eval()).real();
  }

  double value(const Eigen::VectorXd& flat) const {
    ComplexMatrix u = ComplexMatrix::Identity(rho0_.rows(), rho0_.cols());
    for (Eigen::Index k = 0; k < steps_; ++k) {
      u = (step_unitary(flat, k, -1, 0.0) * u).eval();
    }
    return value_of_unitary(u);
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& flat) const {
    const Eigen::Index n = rho0_.rows();
    std::vector<ComplexMatrix> factors(static_cast<std::size_t>(steps_));
    for (Eigen::Index k = 0; k < steps_; ++k) {
      factors[static_cast<std::size_t>(k)] = step_unitary(flat, k, -1, 0.0);
    }
    // prefix[k] = U_k ... U_1 (prefix[0] = I), suffix[k] = U_K ... U_{k+1}
    std::vector<ComplexMatrix> prefix(static_cast<std::size_t>(steps_) + 1);
    std::vector<ComplexMatrix> suffix(static_cast<std::size_t>(steps_) + 1);
    prefix[0] = ComplexMatrix::Identity(n, n);
    for (Eigen::Index k = 0; k < steps_; ++k) {
      prefix[static_cast<std::size_t>(k) + 1] =
          factors[static_cast<std::size_t>(k)] * prefix[static_cast<std::size_t>(k)];
    }
    suffix[static_cast<std::size_t>(steps_)] = ComplexMatrix::Identity(n, n);
    for (Eigen::Index k = steps_ - 1; k >= 0; --k) {
      suffix[static_cast<std::size_t>(k)] =
          suffix[static_cast<std::size_t>(k) + 1] * factors[static_cast<std::size_t>(k)];
    }

    Eigen::VectorXd g(dim());
    for (Eigen::Index k = 0; k < steps_; ++k) {
      for (Eigen::Index m = 0; m < num_controls_; ++m) {
        const ComplexMatrix up = suffix[static_cast<std::size_t>(k) + 1] *
                                 step_unitary(flat, k, m, fd_step_) *
                                 prefix[static_cast<std::size_t>(k)];
        const ComplexMatrix um = suffix[static_cast<std::size_t>(k) + 1] *
                                 step_unitary(flat, k, m, -fd_step_) *
                                 prefix[static_cast<std::size_t>(k)];
        g[k * num_controls_ + m] =
            (value_of_unitary(up) - value_of_unitary(um)) / (2.0 * fd_step_);
      }
    }
    return g;
  }

 private:
  const ControlSystem& system_;
  const ComplexMatrix& rho0_;
  const ComplexMatrix& a_;
  Eigen::Index steps_;
  Eigen::Index num_controls_;
  double dt_;
  double fd_step_;
};

OptimizationReport run_maximize(const ControlSystem& system, const DensityMatrix& rho0,
                                const HermitianMatrix& a, const OptimizerOptions& opts,
                                bool parallel) {
  if (a.dim() != system.dim || rho0.dim() != system.dim) {
    throw ValidationError("maximize_expectation: dimension mismatch");
  }
  if (opts.steps < 1 || !(opts.duration > 0.0)) {
    throw ValidationError("maximize_expectation: need steps >= 1 and duration > 0");
  }
  const PulseProblem problem(system, rho0, a, opts.steps, opts.duration, opts.fd_step);
  const Eigen::Index dim = problem.dim();

  // The multistart machinery minimizes, so flip the sign of both callbacks.
  const detail::Objective f = [&](const Eigen::VectorXd& x) { return -problem.value(x); };
  const detail::Gradient grad = [&](const Eigen::VectorXd& x) {
    return (-problem.gradient(x)).eval();
  };
  const double amp = opts.init_amplitude;
  const detail::Sampler sampler = [dim, amp](detail::Rng& rng) {
    Eigen::VectorXd x(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      x[k] = rng.uniform(-amp, amp);
    }
    return x;
  };
  detail::GdOptions gd;
  gd.learning_rate = opts.learning_rate;
  gd.fd_step = opts.fd_step;
  gd.grad_tol = opts.grad_tol;
  gd.max_iters = opts.max_iters;

  const detail::MultistartResult ms = detail::multistart_minimize(
      f, grad, dim, sampler, opts.seed, opts.restarts, gd, parallel);

  Eigen::MatrixXd amps(opts.steps, static_cast<Eigen::Index>(system.controls.size()));
  for (Eigen::Index k = 0; k < opts.steps; ++k) {
    for (Eigen::Index m = 0; m < amps.cols(); ++m) {
      amps(k, m) = ms.best.x[k * amps.cols() + m];
    }
  }

  OptimizationReport report{
      kinematical_bound(a, rho0),
      -ms.best.value,
      ControlPulse(opts.duration, opts.steps, std::move(amps)),
      ms.best.iterations,
      ms.best.converged,
      0.0,
      ms.best_restart,
  };
  report.gap = report.kinematical_bound - report.best_dynamical_value;
  return report;
}

}  // namespace

OptimizationReport maximize_expectation(const ControlSystem& system, const DensityMatrix& rho0,
                                        const HermitianMatrix& a, const OptimizerOptions& opts) {
  return run_maximize(system, rho0, a, opts, opts.parallel);
}

namespace reference {

OptimizationReport maximize_expectation(const ControlSystem& system, const DensityMatrix& rho0,
                                        const HermitianMatrix& a, OptimizerOptions opts) {
  return run_maximize(system, rho0, a, opts, /*parallel=*/false);
}

}  // namespace reference

double orbit_bound(const LieAlgebraBasis& basis, const DensityMatrix& rho0,
                   const HermitianMatrix& a, const SearchOptions& opts) {
  if (basis.elements.empty()) {
    throw ValidationError("orbit_bound: empty basis");
  }
  if (a.dim() != basis.dim_space || rho0.dim() != basis.dim_space) {
    throw ValidationError("orbit_bound: dimension mismatch");
  }
  const Eigen::Index dim = algebra_dimension(basis);
  const ComplexMatrix& rho = rho0.mat();
  const ComplexMatrix& obs = a.mat();

  const detail::Objective f = [&](const Eigen::VectorXd& c) {
    ComplexMatrix x = ComplexMatrix::Zero(basis.dim_space, basis.dim_space);
    for (Eigen::Index k = 0; k < dim; ++k) {
      x.noalias() += c[k] * basis.elements[static_cast<std::size_t>(k)];
    }
    const ComplexMatrix u = detail::expm_skew_unchecked(x);
    return -detail::trace_product(obs, (u * rho * u.adjoint()).eval()).real();
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
      f, detail::Gradient{}, dim, sampler, opts.seed, opts.restarts, gd, opts.parallel);
  return -ms.best.value;
}

}  // namespace qcontrol
