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

#include "soqst/qmat.hpp"

namespace soqst {

namespace spin {

Mat2 identity() { return Mat2::Identity(); }

Mat2 x() {
  Mat2 m;
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}

Mat2 y() {
  Mat2 m;
  m << 0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0;
  return m;
}

Mat2 z() {
  Mat2 m;
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

Mat2 raising() {
  Mat2 m = Mat2::Zero();
  m(0, 1) = 1.0;
  return m;
}

Mat2 lowering() {
  Mat2 m = Mat2::Zero();
  m(1, 0) = 1.0;
  return m;
}

}  // namespace spin

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Mat4 on_qubit1(const Mat2& op) { return kron(op, Mat2::Identity()); }
Mat4 on_qubit2(const Mat2& op) { return kron(Mat2::Identity(), op); }

namespace {

template <int N>
Eigen::Matrix<cplx, N, N> expm_hermitian_impl(const Eigen::Matrix<cplx, N, N>& h, double t) {
  using M = Eigen::Matrix<cplx, N, N>;
  if (!h.allFinite() || hermiticity_error(h) > kSpectralTol) {
    throw std::invalid_argument("expm_hermitian: matrix is not Hermitian");
  }
  if (!std::isfinite(t)) {
    throw std::invalid_argument("expm_hermitian: non-finite time");
  }
  const M herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(herm);
  Eigen::Matrix<cplx, N, 1> phases;
  for (int k = 0; k < N; ++k) {
    phases(k) = std::exp(cplx(0.0, -es.eigenvalues()(k) * t));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

Mat2 expm_hermitian(const Mat2& h, double t) { return expm_hermitian_impl<2>(h, t); }
Mat4 expm_hermitian(const Mat4& h, double t) { return expm_hermitian_impl<4>(h, t); }

Rho2 partial_trace_assistant(const Rho4& rho) {
  const Mat4& m = rho.matrix();
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    }
  }
  return Rho2(out);
}

Rho2 partial_trace_system(const Rho4& rho) {
  const Mat4& m = rho.matrix();
  Mat2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(i, j) + m(2 + i, 2 + j);
    }
  }
  return Rho2(out);
}

Mat2 bloch_to_matrix(const Vec3& s) {
  return 0.5 * Mat2::Identity() + s.x() * spin::x() + s.y() * spin::y() + s.z() * spin::z();
}

Vec3 matrix_to_bloch(const Mat2& rho) {
  return Vec3(2.0 * (rho * spin::x()).trace().real(), 2.0 * (rho * spin::y()).trace().real(),
              2.0 * (rho * spin::z()).trace().real());
}

}  // namespace soqst
