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

#include "soqst/model.hpp"

#include <cmath>

namespace soqst {

void XyzParams::validate() const {
  if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(jx) || !std::isfinite(jy) ||
      !std::isfinite(jz)) {
    throw std::invalid_argument("XyzParams: all fields must be finite");
  }
}

Mat4 hamiltonian_matrix(const XyzParams& p) {
  p.validate();
  return p.b1 * on_qubit1(spin::z()) + p.b2 * on_qubit2(spin::z()) +
         p.jx * kron(spin::x(), spin::x()) + p.jy * kron(spin::y(), spin::y()) +
         p.jz * kron(spin::z(), spin::z());
}

DerivedParams derive(const XyzParams& p) {
  p.validate();
  DerivedParams d;
  d.bAvg = 0.5 * (p.b1 + p.b2);
  d.bDiff = 0.5 * (p.b1 - p.b2);
  d.jAvg = 0.5 * (p.jx + p.jy);
  d.jDiff = 0.25 * (p.jx - p.jy);
  d.eta1 = std::hypot(d.bAvg, d.jDiff);
  d.eta2 = std::hypot(d.bDiff, 0.5 * d.jAvg);
  // cos(theta/2) >= 0 pins theta to (-pi, pi]; atan2 returns exactly that range.
  // When only the cosine component vanishes and the sine is +0 or -0, atan2
  // gives +-pi; sgn(0) = +1 means we want +pi, so normalize the sign of zero.
  auto angle = [](double sine, double cosine, double eta) {
    if (eta == 0.0) return 0.0;
    return std::atan2(sine == 0.0 ? 0.0 : sine, cosine);
  };
  d.theta1 = angle(d.jDiff, d.bAvg, d.eta1);
  d.theta2 = angle(0.5 * d.jAvg, d.bDiff, d.eta2);
  return d;
}

Spectrum spectrum(const XyzParams& p) {
  const DerivedParams d = derive(p);
  Spectrum s;
  s.lambdas = {0.25 * p.jz + d.eta1, -0.25 * p.jz + d.eta2, -0.25 * p.jz - d.eta2,
               0.25 * p.jz - d.eta1};
  const double c1 = std::cos(0.5 * d.theta1), s1 = std::sin(0.5 * d.theta1);
  const double c2 = std::cos(0.5 * d.theta2), s2 = std::sin(0.5 * d.theta2);
  s.vectors[0] << c1, 0.0, 0.0, s1;
  s.vectors[1] << 0.0, c2, s2, 0.0;
  s.vectors[2] << 0.0, -s2, c2, 0.0;
  s.vectors[3] << -s1, 0.0, 0.0, c1;
  return s;
}

}  // namespace soqst
