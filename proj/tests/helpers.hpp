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

#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "soqst/soqst.hpp"

namespace soqst::testing {

inline constexpr double kPi = std::numbers::pi;

inline XyzParams random_params(std::mt19937_64& rng, double scale = 5.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng), u(rng)};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Pade-based exponential from Eigen's unsupported module; independent of
/// the spectral implementation under test.
inline Mat4 expm_oracle(const Mat4& h, double t) {
  const Mat4 a = cplx(0.0, -t) * h;
  return a.exp();
}

inline Mat2 random_density2(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vec3 s(n(rng), n(rng), n(rng));
  s *= uniform(rng, 0.0, 1.0) / s.norm();
  return bloch_to_matrix(s);
}

inline Mat4 random_density4(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(n(rng), n(rng));
  Mat4 r = a * a.adjoint();
  return r / r.trace();
}

inline Mat4 random_hermitian4(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(n(rng), n(rng));
  return 0.5 * (a + a.adjoint());
}

inline double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

inline XyzParams model_c_plus() { return disordered_optimum_params(DisorderedModel::XZplus).first; }

}  // namespace soqst::testing
