// Copyright 2026 The soqst Authors
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

#include "helpers.hpp"

using namespace soqst;
using namespace soqst::testing;

namespace {

// max |u - e^{i phi} v| with phi chosen from the overlap.
double phase_aligned_error(const Mat4& u, const Mat4& v) {
  const cplx overlap = (v.adjoint() * u).trace();
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  return max_abs(u - phase * v);
}

bool has_coherence(const Mat4& rho, double tol) {
  static const double mag[4] = {1, 0, 0, -1};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (mag[i] != mag[j] && std::abs(rho(i, j)) > tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("pulsesim") {

TEST_CASE("empty sequence is the identity") {
  const QuantumChannel c = compile(PulseSequence{});
  CHECK(c.is_unitary());
  CHECK(max_abs(c.unitary() - Mat4::Identity()) == 0.0);
}

TEST_CASE("single-qubit rotations") {
  PulseSequence s;
  s.rotate(Target::Qubit1, Axis::x(), kPi).rotate(Target::Qubit1, Axis::x(), kPi);
  CHECK(max_abs(compile(s).unitary() + Mat4::Identity()) < 1e-14);

  PulseSequence both;
  both.rotate(Target::Both, Axis::x(), 2 * kPi);
  CHECK(max_abs(compile(both).unitary() - Mat4::Identity()) < 1e-14);

  // [pi/2]_y takes Sz to Sx.
  const Mat4 r = rotation_unitary({Target::Qubit1, Axis::y(), kPi / 2});
  const Mat4 sz = on_qubit1(spin::z()), sx = on_qubit1(spin::x());
  CHECK(max_abs(r * sz * r.adjoint() - sx) < 1e-14);
  CHECK(max_abs(rotation_unitary({Target::Qubit2, Axis::minus_y(), 0.4}) -
                rotation_unitary({Target::Qubit2, Axis::y(), -0.4})) < 1e-14);
  CHECK(max_abs(rotation_unitary({Target::Both, Axis::transverse(kPi / 2), 0.8}) -
                rotation_unitary({Target::Both, Axis::y(), 0.8})) < 1e-14);
  CHECK(max_abs(rotation_unitary({Target::Qubit1, Axis::minus_z(), 0.3}) -
                rotation_unitary({Target::Qubit1, Axis::z(), -0.3})) < 1e-14);
}

TEST_CASE("delays follow the natural Hamiltonian") {
  const NmrParams nmr{120.0, -75.0, kDefaultJ12Hz};
  PulseSequence s;
  s.nmr = nmr;
  s.delay(1e-3);
  CHECK(max_abs(compile(s).unitary() - expm_oracle(nmr.hamiltonian(), 1e-3)) < 1e-12);
  CHECK_THROWS_AS(s.delay(-1.0), std::invalid_argument);
}

TEST_CASE("sequence composition is a homomorphism") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 20; ++n) {
    PulseSequence a, b;
    a.nmr = b.nmr = {uniform(rng, -500, 500), uniform(rng, -500, 500), kDefaultJ12Hz};
    a.rotate(Target::Qubit1, Axis::transverse(uniform(rng, 0, 6)), uniform(rng, 0, 6))
        .delay(uniform(rng, 0, 2e-3));
    b.rotate(Target::Both, Axis::y(), uniform(rng, 0, 6)).delay(uniform(rng, 0, 2e-3));
    const Mat4 ua = compile(a).unitary(), ub = compile(b).unitary();
    PulseSequence ab = a;
    ab.append(b);
    CHECK(max_abs(compile(ab).unitary() - ub * ua) < 1e-12);
  }
}

TEST_CASE("gradient dephasing") {
  std::mt19937_64 rng(103);
  for (int n = 0; n < 20; ++n) {
    const Mat4 rho = random_density4(rng);
    const Mat4 d = gradient_dephase(rho);
    CHECK_FALSE(has_coherence(d, 0.0));
    CHECK(max_abs(gradient_dephase(d) - d) == 0.0);
    CHECK(std::abs(d.trace() - 1.0) < 1e-14);
    for (int k = 0; k < 4; ++k) CHECK(d(k, k) == rho(k, k));
    CHECK(d(1, 2) == rho(1, 2));
    CHECK(d(2, 1) == rho(2, 1));
    CHECK(d(0, 3) == cplx(0.0));
  }
}

TEST_CASE("gradients are not unitary") {
  PulseSequence s;
  s.rotate(Target::Qubit1, Axis::y(), 1.0).gradient();
  const QuantumChannel c = compile(s);
  CHECK_FALSE(c.is_unitary());
  CHECK_THROWS_AS(c.unitary(), ModeError);
  CHECK_THROWS_AS(compile(s, CompileMode::StrictUnitary), ModeError);
  // The channel still acts on states.
  const Mat4 out = c.apply(Mat4(Rho4::maximally_mixed().matrix()));
  CHECK(max_abs(out - Mat4::Identity() / 4.0) < 1e-15);
}

TEST_CASE("product-formula step is consistent") {
  const XyzParams p = model_c_plus();
  const double tau = kPi / 4;
  Mat4 repeated = Mat4::Identity();
  for (int k = 0; k < 36; ++k) repeated = trotter_segment(p, tau / 36) * repeated;
  CHECK(max_abs(repeated - trotter_unitary(p, tau, 36)) < 1e-10);
  CHECK(unitarity_error(trotter_unitary(p, tau, 5)) < 1e-12);
  CHECK_THROWS_AS(trotter_unitary(p, tau, 0), std::invalid_argument);
}

TEST_CASE("product-formula pulse sequence realizes the segments") {
  for (auto model : {DisorderedModel::XZplus, DisorderedModel::XZminus}) {
    const auto [p, tau] = disordered_optimum_params(model);
    for (int m : {1, 2, 5}) {
      const PulseSequence s = trotter_sequence(p, tau, m);
      const Mat4 u = compile(s, CompileMode::StrictUnitary).unitary();
      CHECK(phase_aligned_error(u, trotter_unitary(p, tau, m)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(trotter_sequence({1.0, 1.0, 2.0, 1.0, 1.0}, 1.0, 2), UnsupportedModel);
  CHECK_THROWS_AS(trotter_sequence({1.0, 1.0, 2.0, 0.0, -1.0}, 1.0, 2), UnsupportedModel);
}

TEST_CASE("product-formula error orders") {
  std::mt19937_64 rng(107);
  const XyzParams p = random_params(rng, 2.0);
  auto local = [&](double dt) {
    return max_abs(trotter_segment(p, dt) - propagator_analytic(p, dt).u);
  };
  const double localOrder = std::log2(local(0.02) / local(0.01));
  CHECK(localOrder == doctest::Approx(3.0).epsilon(0.05));

  auto global = [&](int m) {
    return max_abs(trotter_unitary(p, 1.0, m) - propagator_analytic(p, 1.0).u);
  };
  const double globalOrder = std::log2(global(64) / global(128));
  CHECK(globalOrder == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("product-formula fidelity for the XZ optimum") {
  const XyzParams p = model_c_plus();
  const double tau = kPi / 4;
  const Mat4 exact = propagator_analytic(p, tau).u;
  const GateFidelity f2 = gate_fidelity(exact, trotter_unitary(p, tau, 2));
  CHECK(f2.magnitude == doctest::Approx(0.9979055).epsilon(1e-6));
  CHECK(f2.magnitudeSquared == doctest::Approx(0.9958154).epsilon(1e-6));
  const double f1 = gate_fidelity(exact, trotter_unitary(p, tau, 1)).magnitude;
  CHECK(f1 < f2.magnitude);
  CHECK(gate_fidelity(exact, trotter_unitary(p, tau, 8)).magnitude > 0.9997);
}

TEST_CASE("exact decomposition timing for the XZ optimum") {
  const double j = kDefaultJ12Hz;
  const ExactDecompositionTiming t = exact_decomposition_timing(model_c_plus(), kPi / 4);
  const double r2 = std::sqrt(2.0);
  CHECK(t.tau3 == doctest::Approx(1.0 / (4 * j)));
  CHECK(t.tau1 == doctest::Approx(1.0 / (8 * j)));
  CHECK(t.tau2 == doctest::Approx(3.0 / (8 * j)));
  CHECK(t.beta1 == doctest::Approx((4 + 2 * r2) * kPi / 8));
  CHECK(t.beta2 == doctest::Approx((4 - 2 * r2) * kPi / 8));
  CHECK_FALSE(t.phiPlusX);
  CHECK_THROWS_AS(exact_decomposition_timing(model_c_plus(), 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("exact decomposition reproduces the propagator") {
  std::mt19937_64 rng(109);
  for (int n = 0; n < 200; ++n) {
    const XyzParams p = random_params(rng);
    const double tau = uniform(rng, 0.01, 3);
    const NmrParams nmr{uniform(rng, -2000, 2000), uniform(rng, -2000, 2000),
                        uniform(rng, 100, 300)};
    const Mat4 u = compile(exact_decomposition_sequence(p, tau, nmr), CompileMode::StrictUnitary).unitary();
    CHECK(phase_aligned_error(u, propagator_analytic(p, tau).u) < 1e-9);
  }
  // theta1 = theta2: the R block has no first delay.
  const XyzParams equal{2.0, 0.0, 4.0, 0.0, 0.7};
  const DerivedParams d = derive(equal);
  REQUIRE(d.theta1 == doctest::Approx(d.theta2));
  CHECK(exact_decomposition_timing(equal, 1.0).tau1 == doctest::Approx(0.0));
  const Mat4 u = compile(exact_decomposition_sequence(equal, 1.0)).unitary();
  CHECK(phase_aligned_error(u, propagator_analytic(equal, 1.0).u) < 1e-9);
}

TEST_CASE("gate fidelity") {
  const Mat4 u = propagator_analytic(model_c_plus(), 0.7).u;
  const GateFidelity f = gate_fidelity(u, std::exp(cplx(0.0, 0.9)) * u);
  CHECK(f.magnitude == doctest::Approx(1.0));
  CHECK(f.raw.real() == doctest::Approx(std::cos(0.9)));
  CHECK_THROWS_AS(gate_fidelity(u, 2.0 * u), std::invalid_argument);
}

TEST_CASE("dump format") {
  PulseSequence s;
  s.rotate(Target::Qubit1, Axis::y(), kPi / 2).delay(0.000291).gradient();
  s.rotate(Target::Both, Axis::minus_x(), kPi).rotate(Target::Qubit2, Axis::transverse(0.25), 1.0);
  CHECK(dump(s) ==
        "rot q=1 axis=y angle=1.5708\n"
        "delay t=0.000291\n"
        "grad\n"
        "rot q=both axis=-x angle=3.14159\n"
        "rot q=2 axis=phi=0.25 angle=1\n");
}

}
