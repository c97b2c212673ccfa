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
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soqst/model.hpp"

namespace soqst {

/// Largest |Delta| with a pure assistant (epsilon = 1).
double pure_optimum_value();      // 1 / (12 sqrt 3)
/// Largest |Delta| with a completely disordered assistant (epsilon = 0).
double disordered_optimum_value();  // 1 / 32

struct OptimizationResult {
  XyzParams params;
  double tau = 0.0;
  double epsilon = 0.0;
  double absDelta = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// One member of the family of Hamiltonians reaching 1/(12 sqrt 3) at
/// epsilon = 1.
///
/// Signs are, in order: eta1 tau, eta2 tau, B, B gammaB, J, J gammaJ. They are
/// not independent; a set is optimal only when
/// s[0] s[1] = s[2] s[3] = s[4] s[5], and validate() rejects the rest.
struct PureOptimumSpec {
  double gamma1 = 0.5 + 0.28867513459481287;  // 1/2 + sqrt(3)/6
  double gamma2 = 0.5 - 0.28867513459481287;
  int m = 0;
  std::array<int, 6> signs{1, 1, 1, 1, 1, 1};

  /// Throws std::invalid_argument for an unknown Gamma pair, a sign not in
  /// {-1, +1}, or an inconsistent sign set.
  void validate() const;

  /// Xi_k with sin^2(Xi_k / 2) = Gamma_k.
  double xi1() const;
  double xi2() const;
  /// Lambda with sin Lambda = cos(eta1 tau) / cos(Xi1 / 2); sin 2 Lambda = +-1.
  double lambda_angle() const;
};

/// Hamiltonian for the spec at coupling time tau (> 0), with jz = 0.
XyzParams pure_optimum_params(const PureOptimumSpec& spec, double tau);

enum class DisorderedModel { XYX, XXZ, XZplus, XZminus };

/// Parses "xyx", "xxz", "xz+", "xz-".
DisorderedModel parse_disordered_model(const std::string& name);
std::string to_string(DisorderedModel model);

/// Hamiltonian reaching 1/32 at epsilon = 0 and the time tau = pi/4.
std::pair<XyzParams, double> disordered_optimum_params(DisorderedModel model);

/// Global search for the largest |Delta| at a given epsilon. Sampling and
/// refinement happen in the scaled coordinates (parameter * tau), where
/// |Delta| is periodic; the result is mapped back to the chosen tau.
/// Deterministic for fixed (epsilon, tauFixed, seed, budget).
OptimizationResult maximize_delta(double epsilon, std::optional<double> tauFixed,
                                  std::uint64_t seed, long budget);

struct FailureReport {
  std::vector<std::string> predicates;  // names of the conditions that hold
  bool isSingular = false;
};

/// Known sufficient conditions for Delta = 0. Not claimed to be exhaustive.
///   noAnisotropy   sin 2theta1 = sin 2theta2 = 0
///   antisymmetric  sin 2theta1 = -sin 2theta2 and |sin eta1 tau| = |sin eta2 tau|
///   zzPeriod       epsilon = 0 and sin(jz tau) = 0
///   twoZero        epsilon = 0 and two of {jx, jy, b1, b2} vanish
FailureReport failure_check(const XyzParams& p, double tau, double epsilon);

}  // namespace soqst
