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

// Compares the OpenMP kernels against their serial reference
// implementations: same inputs, wall time and max deviation.

#include <omp.h>

#include <chrono>
#include <cstdio>

#include "qcontrol/detail/multistart.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/models.hpp"
#include "qcontrol/optimizer.hpp"
#include "qcontrol/reachability.hpp"

namespace {

using namespace qcontrol;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ControlSystem random_system(Eigen::Index n, std::uint64_t seed) {
  detail::Rng rng(seed, 0);
  ComplexMatrix h0(n, n), h1(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Complex v(rng.normal(), i == j ? 0.0 : rng.normal());
      h0(i, j) = v;
      h0(j, i) = std::conj(v);
      const Complex w(rng.normal(), i == j ? 0.0 : rng.normal());
      h1(i, j) = w;
      h1(j, i) = std::conj(w);
    }
  }
  return ControlSystem(HermitianMatrix(h0), {HermitianMatrix(h1)}, "random benchmark system");
}

void bench_propagate() {
  const Eigen::Index n = 48;
  const Eigen::Index steps = 384;
  const ControlSystem sys = random_system(n, 42);
  detail::Rng rng(7, 1);
  Eigen::MatrixXd amps(steps, 1);
  for (Eigen::Index k = 0; k < steps; ++k) {
    amps(k, 0) = rng.uniform(-1.0, 1.0);
  }
  const ControlPulse pulse(10.0, steps, amps);

  auto t0 = Clock::now();
  const ComplexMatrix u_ref = reference::propagate(sys, pulse);
  const double t_ref = ms_since(t0);

  t0 = Clock::now();
  PropagateOptions opts;
  opts.parallel = true;
  const PropagationResult res = propagate(sys, pulse, opts);
  const double t_par = ms_since(t0);

  std::printf("propagate         N=%td K=%td      serial %8.1f ms   parallel %8.1f ms   "
              "speedup %4.2fx   max|diff| %.2e\n",
              static_cast<std::ptrdiff_t>(n), static_cast<std::ptrdiff_t>(steps), t_ref, t_par,
              t_ref / t_par, (res.final_unitary - u_ref).cwiseAbs().maxCoeff());
}

void bench_orbit_search() {
  const ControlSystem sys = four_level_sp2();
  const LieAlgebraBasis basis = generate_dynamical_algebra(sys);
  const DensityMatrix r0{ComplexMatrix(Eigen::Vector4cd(0.35, 0.30, 0.20, 0.15).asDiagonal())};
  const DensityMatrix r1{ComplexMatrix(Eigen::Vector4cd(0.15, 0.20, 0.30, 0.35).asDiagonal())};

  SearchOptions opts;
  opts.restarts = 32;
  opts.max_iters = 400;

  auto t0 = Clock::now();
  const OrbitSearchResult serial = reference::orbit_search(basis, r0, r1, opts);
  const double t_ref = ms_since(t0);

  t0 = Clock::now();
  const OrbitSearchResult parallel = orbit_search(basis, r0, r1, opts);
  const double t_par = ms_since(t0);

  std::printf("orbit_search      restarts=%d       serial %8.1f ms   parallel %8.1f ms   "
              "speedup %4.2fx   |d_s - d_p| %.2e\n",
              opts.restarts, t_ref, t_par, t_ref / t_par,
              std::abs(serial.best_distance - parallel.best_distance));
}

void bench_pulse_optimizer() {
  const ControlSystem sys = four_level_sp2();
  const DensityMatrix r0{ComplexMatrix(Eigen::Vector4cd(0.35, 0.30, 0.20, 0.15).asDiagonal())};
  const HermitianMatrix a{ComplexMatrix(Eigen::Vector4cd(0.30, 0.35, 0.20, 0.15).asDiagonal())};

  OptimizerOptions opts;
  opts.restarts = 8;
  opts.max_iters = 120;

  auto t0 = Clock::now();
  const OptimizationReport serial = reference::maximize_expectation(sys, r0, a, opts);
  const double t_ref = ms_since(t0);

  t0 = Clock::now();
  const OptimizationReport parallel = maximize_expectation(sys, r0, a, opts);
  const double t_par = ms_since(t0);

  std::printf("pulse optimizer   restarts=%d        serial %8.1f ms   parallel %8.1f ms   "
              "speedup %4.2fx   |v_s - v_p| %.2e\n",
              opts.restarts, t_ref, t_par, t_ref / t_par,
              std::abs(serial.best_dynamical_value - parallel.best_dynamical_value));
}

}  // namespace

int main() {
  std::printf("qcontrol benchmark: OpenMP kernels vs serial reference (%d threads)\n",
              omp_get_max_threads());
  bench_propagate();
  bench_orbit_search();
  bench_pulse_optimizer();
  return 0;
}
