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

// The measurement map. After the coupling period both qubits are measured
// along x; the four outcome probabilities are a linear function of the four
// entries of the unknown qubit state, and this module builds, inverts and
// characterizes that linear map.

#include <array>

#include "soqst/errors.hpp"
#include "soqst/evolve.hpp"

namespace soqst {

/// Reconstruction refuses transfer matrices with |det| at or below this.
inline constexpr double kSingularThreshold = 1e-6;
/// Error coefficients refuse transfer matrices with |det| at or below this.
inline constexpr double kErrorCoeffThreshold = 1e-12;

/// xi = 1/2 + epsilon Sz on the assistant.
struct AssistantState {
  double epsilon = 0.0;

  /// Throws std::invalid_argument unless 0 <= epsilon <= 1.
  void validate() const;
  Mat2 xi() const;
};

/// Outcome probabilities, index k for the system and q for the assistant;
/// 1 means the +x outcome.
struct JointProbabilities {
  double p11 = 0.0;
  double p12 = 0.0;
  double p21 = 0.0;
  double p22 = 0.0;

  std::array<double, 4> as_array() const { return {p11, p12, p21, p22}; }
  Eigen::Vector4d as_vector() const { return {p11, p12, p21, p22}; }
  static JointProbabilities from_vector(const Eigen::Vector4d& v) {
    return {v(0), v(1), v(2), v(3)};
  }
  double sum() const { return p11 + p12 + p21 + p22; }
};

/// Projector onto outcome (k, q), k and q in {1, 2}.
Mat4 outcome_projector(int k, int q);

/// Probabilities of the x-basis measurement on an arbitrary two-qubit state.
JointProbabilities x_basis_probabilities(const Mat4& rhoTau);

JointProbabilities joint_probabilities(const Rho2& rho, const AssistantState& xi,
                                       const Propagator& u);

struct TransferMatrix {
  Mat4 m;       // (rho11, rho12, rho21, rho22) -> P
  Mat4 mTilde;  // (1, sx, sy, sz) -> P
  cplx delta;   // det(m)
  double absDelta = 0.0;
};

TransferMatrix transfer_matrix(const AssistantState& xi, const Propagator& u);
TransferMatrix transfer_matrix(const AssistantState& xi, const Mat4& u);

/// Closed-form |det M|; independent of the brute-force construction.
double abs_delta_analytic(const XyzParams& p, double tau, double epsilon);

struct Reconstruction {
  Vec3 s = Vec3::Zero();
  bool nonPhysical = false;     // |s| > 1 + 1e-6; values are not clipped
  double imagResidual = 0.0;    // largest discarded imaginary part
};

/// Inverts the map. Throws SingularTransfer when |det| <= kSingularThreshold.
Reconstruction reconstruct(const JointProbabilities& probs, const TransferMatrix& tm);

/// Error amplification per Bloch component and combined.
///
/// E_nu is the root-sum-square of the cofactors in the nu column of mTilde
/// over |det mTilde|, i.e. the RMS response of s_nu to independent equal-size
/// errors in the four probabilities; E = sqrt(Ex^2 + Ey^2 + Ez^2) / 2.
struct ErrorCoefficients {
  double ex = 0.0;
  double ey = 0.0;
  double ez = 0.0;
  double e = 0.0;
};

/// Throws SingularTransfer when |det| <= kErrorCoeffThreshold.
ErrorCoefficients error_coefficients(const TransferMatrix& tm);

/// Plain cofactor column sums over det mTilde, the response to one common
/// shift of all four probabilities. Kept for comparison: at epsilon = 0 they
/// vanish identically because the uniform vector is the image of the
/// maximally mixed state.
Eigen::Vector3cd cofactor_column_sums(const TransferMatrix& tm);

/// Scales s back onto the unit ball if |s| > 1.
Vec3 project_to_bloch_ball(const Vec3& s);

namespace detail {
/// Diagnostic map using z instead of x projectors. Always rank deficient,
/// because the coupling never mixes the zero- and double-quantum subspaces.
Mat4 z_basis_transfer_matrix(const AssistantState& xi, const Mat4& u);
}  // namespace detail

}  // namespace soqst
