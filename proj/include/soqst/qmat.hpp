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

// Small dense complex matrices for one system qubit plus one assistant qubit.
//
// Basis ordering is fixed everywhere as |00>, |01>, |10>, |11>, where |0> is
// the S_z = +1/2 state and the left factor is qubit 1 (the system). Spin
// operators are S = sigma/2 and hbar = 1.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace soqst {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

/// Tolerance for exact algebraic identities.
inline constexpr double kExactTol = 1e-12;
/// Tolerance for anything that goes through an eigen-solver.
inline constexpr double kSpectralTol = 1e-10;
/// Lower bound accepted for density-matrix eigenvalues.
inline constexpr double kPsdTol = 1e-10;

namespace spin {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 raising();   // S+ = Sx + i Sy
Mat2 lowering();  // S- = Sx - i Sy
}  // namespace spin

/// Tensor product with qubit 1 as the left (most significant) factor.
Mat4 kron(const Mat2& a, const Mat2& b);

/// `op` acting on qubit 1 (system) or qubit 2 (assistant), identity elsewhere.
Mat4 on_qubit1(const Mat2& op);
Mat4 on_qubit2(const Mat2& op);

template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
double unitarity_error(const Eigen::MatrixBase<Derived>& m) {
  using M = typename Derived::PlainObject;
  return (m * m.adjoint() - M::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// exp(-i h t) for Hermitian h via its spectral decomposition.
/// Throws std::invalid_argument when h is not Hermitian within 1e-10.
Mat2 expm_hermitian(const Mat2& h, double t);
Mat4 expm_hermitian(const Mat4& h, double t);

/// A validated density matrix: Hermitian, unit trace, positive semidefinite.
template <int N>
class DensityMatrix {
 public:
  using Matrix = Eigen::Matrix<cplx, N, N>;

  /// Throws std::invalid_argument if any invariant is violated.
  explicit DensityMatrix(const Matrix& m) : m_(m) {
    if (!m.allFinite()) {
      throw std::invalid_argument("density matrix has non-finite entries");
    }
    if (hermiticity_error(m) > kExactTol) {
      throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m.trace() - cplx(1.0)) > kExactTol) {
      throw std::invalid_argument("density matrix trace is not 1");
    }
    const Matrix herm = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol) {
      throw std::invalid_argument("density matrix is not positive semidefinite");
    }
  }

  const Matrix& matrix() const { return m_; }
  operator const Matrix&() const { return m_; }  // NOLINT(google-explicit-constructor)

  static DensityMatrix maximally_mixed() { return DensityMatrix(Matrix::Identity() / double(N)); }

 private:
  Matrix m_;
};

using Rho2 = DensityMatrix<2>;
using Rho4 = DensityMatrix<4>;

/// Traces out qubit 2 (the assistant).
Rho2 partial_trace_assistant(const Rho4& rho);

/// Traces out qubit 1 (the system).
Rho2 partial_trace_system(const Rho4& rho);

/// rho = (1 + s.sigma)/2. No positivity check: |s| may exceed 1.
Mat2 bloch_to_matrix(const Vec3& s);

/// s_nu = Tr(rho sigma_nu).
Vec3 matrix_to_bloch(const Mat2& rho);

}  // namespace soqst
