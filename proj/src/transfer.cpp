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

#include "soqst/transfer.hpp"

#include <cmath>
#include <string>

namespace soqst {

namespace {

// (1, sx, sy, sz) -> 2 * (rho11, rho12, rho21, rho22)
Mat4 bloch_change_of_basis() {
  const cplx i(0.0, 1.0);
  Mat4 v;
  v << 1.0, 0.0, 0.0, 1.0,
       0.0, 1.0, -i, 0.0,
       0.0, 1.0, i, 0.0,
       1.0, 0.0, 0.0, -1.0;
  return v;
}

Mat2 elementary(int col) {
  Mat2 e = Mat2::Zero();
  e(col / 2, col % 2) = 1.0;
  return e;
}

template <typename ProjectorFn>
Mat4 linear_map(const AssistantState& xi, const Mat4& u, ProjectorFn projector) {
  xi.validate();
  const Mat2 x = xi.xi();
  Mat4 m;
  for (int col = 0; col < 4; ++col) {
    const Mat4 out = u * kron(elementary(col), x) * u.adjoint();
    for (int row = 0; row < 4; ++row) {
      m(row, col) = (projector(row / 2 + 1, row % 2 + 1) * out).trace();
    }
  }
  return m;
}

cplx cofactor(const Mat4& a, int row, int col) {
  Eigen::Matrix3cd minor;
  for (int i = 0, mi = 0; i < 4; ++i) {
    if (i == row) continue;
    for (int j = 0, mj = 0; j < 4; ++j) {
      if (j == col) continue;
      minor(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return ((row + col) % 2 == 0 ? 1.0 : -1.0) * minor.determinant();
}

}  // namespace

void AssistantState::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("AssistantState: epsilon must lie in [0, 1]");
  }
}

Mat2 AssistantState::xi() const { return 0.5 * Mat2::Identity() + epsilon * spin::z(); }

Mat4 outcome_projector(int k, int q) {
  if (k < 1 || k > 2 || q < 1 || q > 2) {
    throw std::invalid_argument("outcome_projector: k and q must be 1 or 2");
  }
  const Mat2 half = 0.5 * Mat2::Identity();
  const double sk = (k == 1) ? -1.0 : 1.0;  // (-1)^k
  const double sq = (q == 1) ? -1.0 : 1.0;
  return kron(half - sk * spin::x(), half - sq * spin::x());
}

JointProbabilities x_basis_probabilities(const Mat4& rhoTau) {
  auto p = [&](int k, int q) { return (outcome_projector(k, q) * rhoTau).trace().real(); };
  return {p(1, 1), p(1, 2), p(2, 1), p(2, 2)};
}

JointProbabilities joint_probabilities(const Rho2& rho, const AssistantState& xi,
                                       const Propagator& u) {
  xi.validate();
  const Mat4 rho0 = kron(rho.matrix(), xi.xi());
  return x_basis_probabilities(u.u * rho0 * u.u.adjoint());
}

TransferMatrix transfer_matrix(const AssistantState& xi, const Mat4& u) {
  TransferMatrix tm;
  tm.m = linear_map(xi, u, outcome_projector);
  tm.mTilde = 0.5 * tm.m * bloch_change_of_basis();
  tm.delta = tm.m.determinant();
  tm.absDelta = std::abs(tm.delta);
  return tm;
}

TransferMatrix transfer_matrix(const AssistantState& xi, const Propagator& u) {
  return transfer_matrix(xi, u.u);
}

double abs_delta_analytic(const XyzParams& p, double tau, double epsilon) {
  AssistantState{epsilon}.validate();
  const DerivedParams d = derive(p);
  const double st1 = std::sin(d.theta1), st2 = std::sin(d.theta2);
  const double se1 = std::sin(d.eta1 * tau), se2 = std::sin(d.eta2 * tau);
  const double a1 = std::sin(2.0 * d.theta1) * se1 * se1;
  const double a2 = std::sin(2.0 * d.theta2) * se2 * se2;
  const double x = (1.0 - 2.0 * st1 * st1 * se1 * se1) * st2 * std::sin(2.0 * d.eta2 * tau) -
                   (1.0 - 2.0 * st2 * st2 * se2 * se2) * st1 * std::sin(2.0 * d.eta1 * tau);
  const double value = (1.0 - epsilon * epsilon) * std::sin(-p.jz * tau) * (a1 * a1 - a2 * a2) +
                       2.0 * epsilon * (a1 + a2) * x;
  return std::abs(value) / 32.0;
}

Reconstruction reconstruct(const JointProbabilities& probs, const TransferMatrix& tm) {
  if (!(tm.absDelta > kSingularThreshold)) {
    throw SingularTransfer("transfer matrix is singular (|Delta| = " +
                           std::to_string(tm.absDelta) + ")");
  }
  const Eigen::Vector4cd rhs = probs.as_vector().cast<cplx>();
  const Eigen::Vector4cd sol = tm.mTilde.inverse() * rhs;
  Reconstruction r;
  r.s = sol.tail<3>().real();
  r.imagResidual = sol.imag().cwiseAbs().maxCoeff();
  r.nonPhysical = r.s.norm() > 1.0 + 1e-6;
  return r;
}

ErrorCoefficients error_coefficients(const TransferMatrix& tm) {
  if (!(tm.absDelta > kErrorCoeffThreshold)) {
    throw SingularTransfer("error coefficients undefined for a singular transfer matrix");
  }
  const double det = std::abs(tm.mTilde.determinant());
  std::array<double, 3> e{};
  for (int nu = 1; nu <= 3; ++nu) {
    double sq = 0.0;
    for (int k = 0; k < 4; ++k) sq += std::norm(cofactor(tm.mTilde, k, nu));
    e[nu - 1] = std::sqrt(sq) / det;
  }
  ErrorCoefficients out;
  out.ex = e[0];
  out.ey = e[1];
  out.ez = e[2];
  out.e = 0.5 * std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
  return out;
}

Eigen::Vector3cd cofactor_column_sums(const TransferMatrix& tm) {
  if (!(tm.absDelta > kErrorCoeffThreshold)) {
    throw SingularTransfer("error coefficients undefined for a singular transfer matrix");
  }
  const cplx det = tm.mTilde.determinant();
  Eigen::Vector3cd out;
  for (int nu = 1; nu <= 3; ++nu) {
    cplx sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += cofactor(tm.mTilde, k, nu);
    out(nu - 1) = sum / det;
  }
  return out;
}

Vec3 project_to_bloch_ball(const Vec3& s) {
  const double n = s.norm();
  return n > 1.0 ? Vec3(s / n) : s;
}

namespace detail {

Mat4 z_basis_transfer_matrix(const AssistantState& xi, const Mat4& u) {
  auto zProjector = [](int k, int q) {
    const Mat2 half = 0.5 * Mat2::Identity();
    const double sk = (k == 1) ? -1.0 : 1.0;
    const double sq = (q == 1) ? -1.0 : 1.0;
    return kron(half - sk * spin::z(), half - sq * spin::z());
  };
  return linear_map(xi, u, zProjector);
}

}  // namespace detail

}  // namespace soqst
