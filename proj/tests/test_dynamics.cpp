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

#include <doctest.h>

#include "qcontrol/dynamics.hpp"
#include "support/helpers.hpp"

using namespace qcontrol;
using namespace qctest;

namespace {

ControlPulse random_pulse(Rng& rng, double duration, Eigen::Index steps, Eigen::Index controls,
                          double amp = 1.0) {
  Eigen::MatrixXd a(steps, controls);
  for (Eigen::Index k = 0; k < steps; ++k) {
    for (Eigen::Index m = 0; m < controls; ++m) {
      a(k, m) = rng.uniform(-amp, amp);
    }
  }
  return ControlPulse(duration, steps, std::move(a));
}

ComplexMatrix real_symmetric_density(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = rng.normal();
    }
  }
  Eigen::MatrixXd p = a * a.transpose();
  p /= p.trace();
  return p.cast<Complex>();
}

}  // namespace

TEST_CASE("pulse validation") {
  CHECK_THROWS_AS(ControlPulse(-1.0, 2, Eigen::MatrixXd::Zero(2, 1)), ValidationError);
  CHECK_THROWS_AS(ControlPulse(1.0, 0, Eigen::MatrixXd::Zero(0, 1)), ValidationError);
  CHECK_THROWS_AS(ControlPulse(1.0, 3, Eigen::MatrixXd::Zero(2, 1)), ValidationError);
  CHECK_NOTHROW(ControlPulse(0.0, 1, Eigen::MatrixXd::Zero(1, 1)));  // zero duration allowed

  const ControlSystem sys = three_level_so3();
  CHECK_THROWS_AS(propagate(sys, ControlPulse::zero(1.0, 4, 2)), ValidationError);  // M mismatch
}

TEST_CASE("propagate: drift-only and zero-duration limits") {
  const ControlSystem sys = three_level_so3();
  const double t = 1.7;
  const PropagationResult res = propagate(sys, ControlPulse::zero(t, 8, 1));
  const ComplexMatrix expected =
      expm_skew(SkewHermitianMatrix(Complex(0, -t) * sys.drift.mat()));
  CHECK((res.final_unitary - expected).norm() <= 1e-12);

  const PropagationResult zero = propagate(sys, ControlPulse::zero(0.0, 1, 1));
  CHECK((zero.final_unitary - ComplexMatrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("propagate: resonant flip in closed form") {
  // drift 0, control sigma_x, amplitude 1, duration pi: U = exp(-i pi sx) = -I
  const ControlSystem sys(HermitianMatrix(ComplexMatrix::Zero(2, 2)),
                          {HermitianMatrix(pauli_x())});
  Eigen::MatrixXd amps = Eigen::MatrixXd::Ones(16, 1);
  const PropagationResult res = propagate(sys, ControlPulse(M_PI, 16, amps));
  CHECK((res.final_unitary + ComplexMatrix::Identity(2, 2)).norm() <= 1e-12);
}

TEST_CASE("propagate: composition and unitarity") {
  Rng rng(51, 0);
  const ControlSystem sys = four_level_sp2();
  for (int trial = 0; trial < 5; ++trial) {
    const ControlPulse pulse = random_pulse(rng, 3.0, 12, 1);
    // split at step 7: p1 = first 7 steps, p2 = last 5
    const double dt = pulse.duration / static_cast<double>(pulse.steps);
    const ControlPulse p1(7 * dt, 7, pulse.amplitudes.topRows(7));
    const ControlPulse p2(5 * dt, 5, pulse.amplitudes.bottomRows(5));
    const ComplexMatrix whole = propagate(sys, pulse).final_unitary;
    const ComplexMatrix split =
        propagate(sys, p2).final_unitary * propagate(sys, p1).final_unitary;
    CHECK((whole - split).norm() <= 1e-10);

    const PropagationResult res = propagate(sys, pulse);
    CHECK(res.unitarity_defect <= 1e-9 * static_cast<double>(pulse.steps));
  }
}

TEST_CASE("propagate: intermediates end at the final unitary") {
  Rng rng(52, 0);
  const ControlSystem sys = three_level_so3();
  const ControlPulse pulse = random_pulse(rng, 2.0, 6, 1);
  PropagateOptions opts;
  opts.keep_intermediates = true;
  const PropagationResult res = propagate(sys, pulse, opts);
  REQUIRE(res.intermediate_unitaries.size() == 6);
  CHECK((res.intermediate_unitaries.back() - res.final_unitary).norm() == 0.0);
}

TEST_CASE("evolve_density") {
  const DensityMatrix rho0{rho0_4level()};

  CHECK((evolve_density(rho0, ComplexMatrix::Identity(4, 4)).mat() - rho0.mat()).norm() <= 1e-14);

  // the swap of the first two levels carries rho0 to rho1
  ComplexMatrix swap = ComplexMatrix::Identity(4, 4);
  swap(0, 0) = 0;
  swap(1, 1) = 0;
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK((evolve_density(rho0, swap).mat() - rho1_4level()).norm() <= 1e-14);

  // diagonal phases leave diagonal states alone
  ComplexMatrix phases = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    phases(i, i) = std::exp(Complex(0.0, 0.3 * (i + 1)));
  }
  CHECK((evolve_density(rho0, phases).mat() - rho0.mat()).norm() <= 1e-14);

  CHECK_THROWS_AS(evolve_density(rho0, ComplexMatrix(2.0 * ComplexMatrix::Identity(4, 4))),
                  ValidationError);
}

TEST_CASE("evolution preserves spectrum and purity") {
  Rng rng(53, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.next_u64() % 4);
    const DensityMatrix rho{random_density(rng, n)};
    const ComplexMatrix u = expm_skew(SkewHermitianMatrix(random_skew_hermitian(rng, n)));
    const DensityMatrix evolved = evolve_density(rho, u);
    CHECK((evolved.eigenvalues() - rho.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-10);
    const double purity0 = (rho.mat() * rho.mat()).trace().real();
    const double purity1 = (evolved.mat() * evolved.mat()).trace().real();
    CHECK(std::abs(purity0 - purity1) <= 1e-10);
  }
}

TEST_CASE("expectation values") {
  const DensityMatrix rho0{rho0_4level()};
  const DensityMatrix rho1{rho1_4level()};
  const HermitianMatrix identity{ComplexMatrix(ComplexMatrix::Identity(4, 4))};
  const HermitianMatrix a{rho1_4level()};

  CHECK(expectation(identity, rho0) == doctest::Approx(1.0).epsilon(1e-14));

  // oracle: direct arithmetic on the diagonals
  const double self_overlap = 0.30 * 0.30 + 0.35 * 0.35 + 0.20 * 0.20 + 0.15 * 0.15;
  CHECK(self_overlap == doctest::Approx(0.275).epsilon(1e-15));
  CHECK(expectation(a, rho1) == doctest::Approx(self_overlap).epsilon(1e-13));

  const double cross_overlap = 0.30 * 0.35 + 0.35 * 0.30 + 0.20 * 0.20 + 0.15 * 0.15;
  CHECK(cross_overlap == doctest::Approx(0.2725).epsilon(1e-15));
  CHECK(expectation(a, rho0) == doctest::Approx(cross_overlap).epsilon(1e-13));

  // the raw trace has negligible imaginary residue
  Rng rng(54, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 4);
    const DensityMatrix rho{random_density(rng, 4)};
    CHECK(std::abs((h * rho.mat()).trace().imag()) <= 1e-12);
  }
}

TEST_CASE("real states stay real in the adapted basis") {
  const ControlSystem sys = three_level_so3();
  const ComplexMatrix u = real_structure_unitary();
  Rng rng(55, 0);
  PropagateOptions opts;
  opts.keep_intermediates = true;

  for (int p = 0; p < 10; ++p) {
    const ControlPulse pulse = random_pulse(rng, 4.0, 12, 1, 2.0);
    const PropagationResult res = propagate(sys, pulse, opts);
    for (int s = 0; s < 3; ++s) {
      const ComplexMatrix rho_adapted = real_symmetric_density(rng, 3);
      for (const auto& uk : res.intermediate_unitaries) {
        const ComplexMatrix w = u * uk * u.adjoint();
        const ComplexMatrix evolved = w * rho_adapted * w.adjoint();
        CHECK(evolved.imag().cwiseAbs().maxCoeff() <= 1e-9);
      }
    }
  }
}
