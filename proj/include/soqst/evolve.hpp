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

#pragma once

#include "soqst/model.hpp"

namespace soqst {

/// Independent entries of the coupling propagator. Everything else is zero:
/// a_k on the diagonal, b couples |00> and |11>, d couples |01> and |10>.
struct PropagatorCoefficients {
  cplx a1, a2, a3, a4, b, d;
};

struct Propagator {
  double tau = 0.0;
  Mat4 u = Mat4::Identity();
  PropagatorCoefficients coeffs{1.0, 1.0, 1.0, 1.0, 0.0, 0.0};
};

/// Places the coefficients into a 4x4 matrix.
Mat4 assemble(const PropagatorCoefficients& c);

/// U(tau) = exp(-i H tau) from the closed-form eigensystem.
Propagator propagator_analytic(const XyzParams& p, double tau);

/// The three mutually commuting factors of U(tau).
struct PropagatorFactors {
  Mat4 zz;             // exp(-i jz tau Sz1 Sz2)
  Mat4 zeroQuantum;    // acts inside span{|01>, |10>}
  Mat4 doubleQuantum;  // acts inside span{|00>, |11>}

  Mat4 product() const { return zz * zeroQuantum * doubleQuantum; }
};

PropagatorFactors propagator_components(const XyzParams& p, double tau);

}  // namespace soqst
