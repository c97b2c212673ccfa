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

#include <array>

#include "soqst/qmat.hpp"

namespace soqst {

/// H = b1 Sz1 + b2 Sz2 + jx Sx1Sx2 + jy Sy1Sy2 + jz Sz1Sz2 (angular frequencies).
struct XyzParams {
  double b1 = 0.0;
  double b2 = 0.0;
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;

  /// Throws std::invalid_argument on non-finite fields.
  void validate() const;

  friend bool operator==(const XyzParams&, const XyzParams&) = default;
};

/// Quantities the closed-form eigensystem is written in.
///
/// The anisotropies are kept as products (bDiff = B*gammaB, jDiff = J*gammaJ/2)
/// rather than ratios, so B = 0 or J = 0 is not a special case.
struct DerivedParams {
  double bAvg = 0.0;   // (b1 + b2) / 2
  double bDiff = 0.0;  // (b1 - b2) / 2
  double jAvg = 0.0;   // (jx + jy) / 2
  double jDiff = 0.0;  // (jx - jy) / 4
  double eta1 = 0.0;   // hypot(bAvg, jDiff)
  double eta2 = 0.0;   // hypot(bDiff, jAvg / 2)
  double theta1 = 0.0;  // in (-pi, pi], 0 when eta1 = 0
  double theta2 = 0.0;  // in (-pi, pi], 0 when eta2 = 0
};

/// Eigenpairs in the fixed positional order (lambda1..lambda4), not sorted.
struct Spectrum {
  std::array<double, 4> lambdas{};
  std::array<Eigen::Vector4d, 4> vectors{};
};

Mat4 hamiltonian_matrix(const XyzParams& p);
DerivedParams derive(const XyzParams& p);
Spectrum spectrum(const XyzParams& p);

}  // namespace soqst
