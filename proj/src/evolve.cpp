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

#include "soqst/evolve.hpp"

#include <cmath>

namespace soqst {

namespace {

cplx phase(double angle) { return std::exp(cplx(0.0, -angle)); }

}  // namespace

Mat4 assemble(const PropagatorCoefficients& c) {
  Mat4 u = Mat4::Zero();
  u(0, 0) = c.a1;
  u(1, 1) = c.a2;
  u(2, 2) = c.a3;
  u(3, 3) = c.a4;
  u(0, 3) = u(3, 0) = c.b;
  u(1, 2) = u(2, 1) = c.d;
  return u;
}

Propagator propagator_analytic(const XyzParams& p, double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("propagator_analytic: non-finite tau");
  }
  const DerivedParams d = derive(p);
  const Spectrum s = spectrum(p);
  const cplx e1 = phase(s.lambdas[0] * tau);
  const cplx e2 = phase(s.lambdas[1] * tau);
  const cplx e3 = phase(s.lambdas[2] * tau);
  const cplx e4 = phase(s.lambdas[3] * tau);
  const double c1 = std::cos(0.5 * d.theta1), s1 = std::sin(0.5 * d.theta1);
  const double c2 = std::cos(0.5 * d.theta2), s2 = std::sin(0.5 * d.theta2);

  Propagator out;
  out.tau = tau;
  out.coeffs.a1 = c1 * c1 * e1 + s1 * s1 * e4;
  out.coeffs.a4 = s1 * s1 * e1 + c1 * c1 * e4;
  out.coeffs.a2 = c2 * c2 * e2 + s2 * s2 * e3;
  out.coeffs.a3 = s2 * s2 * e2 + c2 * c2 * e3;
  out.coeffs.b = 0.5 * std::sin(d.theta1) * (e1 - e4);
  out.coeffs.d = 0.5 * std::sin(d.theta2) * (e2 - e3);
  out.u = assemble(out.coeffs);
  return out;
}

PropagatorFactors propagator_components(const XyzParams& p, double tau) {
  if (!std::isfinite(tau)) {
    throw std::invalid_argument("propagator_components: non-finite tau");
  }
  const DerivedParams d = derive(p);
  const Mat4 one = Mat4::Identity();
  const Mat4 zz4 = 4.0 * kron(spin::z(), spin::z());
  const Mat4 zDiff = on_qubit1(spin::z()) - on_qubit2(spin::z());
  const Mat4 zSum = on_qubit1(spin::z()) + on_qubit2(spin::z());
  const Mat4 flipFlop =
      kron(spin::raising(), spin::lowering()) + kron(spin::lowering(), spin::raising());
  const Mat4 flipFlip =
      kron(spin::raising(), spin::raising()) + kron(spin::lowering(), spin::lowering());
  const cplx i(0.0, 1.0);

  PropagatorFactors f;
  const double az = 0.25 * p.jz * tau;
  f.zz = std::cos(az) * one - i * std::sin(az) * zz4;

  const double c2 = std::cos(d.eta2 * tau), sn2 = std::sin(d.eta2 * tau);
  f.zeroQuantum = 0.5 * (1.0 + c2) * one + 0.5 * (1.0 - c2) * zz4 -
                  i * sn2 * (std::cos(d.theta2) * zDiff + std::sin(d.theta2) * flipFlop);

  const double c1 = std::cos(d.eta1 * tau), sn1 = std::sin(d.eta1 * tau);
  f.doubleQuantum = 0.5 * (1.0 + c1) * one - 0.5 * (1.0 - c1) * zz4 -
                    i * sn1 * (std::cos(d.theta1) * zSum + std::sin(d.theta1) * flipFlip);
  return f;
}

}  // namespace soqst
