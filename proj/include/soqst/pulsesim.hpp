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

// NMR pulse sequences for the two-spin system: hard pulses, free evolution
// under the natural Hamiltonian, and pulsed field gradients.
//
// A rotation [theta]_nu is exp(-i theta S_nu). Delays are in seconds and the
// scalar coupling in Hz; the natural Hamiltonian is
//   H_NMR = omega1 Sz1 + omega2 Sz2 + 2 pi J12 Sz1 Sz2.

#include <string>
#include <variant>
#include <vector>

#include "soqst/errors.hpp"
#include "soqst/evolve.hpp"

namespace soqst {

/// Scalar coupling of the 13C-labelled chloroform used as the reference sample.
inline constexpr double kDefaultJ12Hz = 214.95;

struct NmrParams {
  double omega1 = 0.0;  // rad/s in the rotating frame
  double omega2 = 0.0;
  double j12Hz = kDefaultJ12Hz;

  void validate() const;
  Mat4 hamiltonian() const;
};

enum class Target { Qubit1, Qubit2, Both };

/// Rotation axis: a direction in the transverse plane (azimuth from +x) or +-z.
struct Axis {
  enum class Kind { Transverse, PlusZ, MinusZ };
  Kind kind = Kind::Transverse;
  double azimuth = 0.0;

  static Axis x() { return {Kind::Transverse, 0.0}; }
  static Axis y();
  static Axis minus_x();
  static Axis minus_y();
  static Axis z() { return {Kind::PlusZ, 0.0}; }
  static Axis minus_z() { return {Kind::MinusZ, 0.0}; }
  static Axis transverse(double azimuth) { return {Kind::Transverse, azimuth}; }

  Mat2 spin_operator() const;
  /// "x", "y", "-x", "-y", "z", "-z", or "phi=<radians>".
  std::string name() const;
};

struct Rotation {
  Target target = Target::Qubit1;
  Axis axis;
  double angle = 0.0;
};

struct Delay {
  double duration = 0.0;  // seconds
};

struct Gradient {};

using PulseEvent = std::variant<Rotation, Delay, Gradient>;

struct PulseSequence {
  std::vector<PulseEvent> events;
  NmrParams nmr;

  PulseSequence& rotate(Target target, Axis axis, double angle);
  PulseSequence& delay(double seconds);
  PulseSequence& gradient();
  PulseSequence& append(const PulseSequence& other);
};

/// Removes every element with nonzero coherence order. Populations and the
/// |01><10| pair survive.
Mat4 gradient_dephase(const Mat4& rho);
Rho4 gradient_dephase(const Rho4& rho);

/// A composition of unitary steps and gradient dephasing, in time order.
class QuantumChannel {
 public:
  QuantumChannel() = default;
  explicit QuantumChannel(const Mat4& u);

  void then_unitary(const Mat4& u);
  void then_dephase();

  bool is_unitary() const;
  /// Throws ModeError if the channel contains a gradient.
  const Mat4& unitary() const;

  Mat4 apply(const Mat4& rho) const;
  Rho4 apply(const Rho4& rho) const;

 private:
  struct Stage {
    bool dephase = false;
    Mat4 u = Mat4::Identity();
  };
  std::vector<Stage> stages_{Stage{}};
};

enum class CompileMode { Channel, StrictUnitary };

/// Compiles events left to right. In StrictUnitary mode a gradient throws
/// ModeError.
QuantumChannel compile(const PulseSequence& seq, CompileMode mode = CompileMode::Channel);

/// exp(-i angle S_axis) on the chosen qubit(s).
Mat4 rotation_unitary(const Rotation& r);
Mat4 delay_unitary(const NmrParams& nmr, double seconds);

/// One symmetric product-formula step U_z(dt/2) U_xy(dt) U_z(dt/2), with
/// H_z = b1 Sz1 + b2 Sz2 + jz Sz1Sz2 and H_xy = jx Sx1Sx2 + jy Sy1Sy2.
Mat4 trotter_segment(const XyzParams& p, double dt);

/// m steps of trotter_segment covering tau.
Mat4 trotter_unitary(const XyzParams& p, double tau, int m);

/// Pulse sequence implementing trotter_unitary for the XZ family
/// (jy = 0, jx tau > 0, jz tau > 0). The field terms are produced by the
/// chemical-shift offsets omega_k = 2 pi J12 b_k / jz. Throws UnsupportedModel
/// for other Hamiltonians.
PulseSequence trotter_sequence(const XyzParams& p, double tau, int m,
                               double j12Hz = kDefaultJ12Hz);

/// Delays and angles of the exact decomposition U = R Udiag R^dagger.
struct ExactDecompositionTiming {
  double tau1 = 0.0;  // seconds, R block
  double tau2 = 0.0;  // seconds, R block
  double tau3 = 0.0;  // seconds, diagonal block
  double beta1 = 0.0;
  double beta2 = 0.0;
  bool phiPlusX = true;  // second-qubit phase of the R block
};

ExactDecompositionTiming exact_decomposition_timing(const XyzParams& p, double tau,
                                                    double j12Hz = kDefaultJ12Hz);

/// R^dagger block, diagonal block, R block, in time order. Reproduces
/// propagator_analytic(p, tau) up to a global phase for any NMR offsets.
PulseSequence exact_decomposition_sequence(const XyzParams& p, double tau,
                                           const NmrParams& nmr = NmrParams{});

struct GateFidelity {
  cplx raw;                 // Tr(u^dagger v) / 4
  double magnitude = 0.0;   // |raw|
  double magnitudeSquared = 0.0;
};

/// Throws std::invalid_argument unless both inputs are unitary within 1e-8.
GateFidelity gate_fidelity(const Mat4& u, const Mat4& v);

/// One line per event: "rot q=1 axis=y angle=1.5708", "delay t=0.000291", "grad".
std::string dump(const PulseSequence& seq);

}  // namespace soqst
