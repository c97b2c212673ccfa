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

// Simulated single-observable tomography: prepare, couple, measure, invert.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "soqst/pulsesim.hpp"
#include "soqst/transfer.hpp"

namespace soqst {

/// Qubit state in spherical Bloch coordinates.
struct BlochState {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  /// Throws std::invalid_argument unless 0 <= r <= 1 and all fields are finite.
  /// theta and phi are not range-restricted; they only enter through sin/cos.
  void validate() const;
  Vec3 vector() const;
  Rho2 rho() const;
};

struct NoiseSpec {
  enum class Kind { None, Gaussian, Shots };
  Kind kind = Kind::None;
  double sigma = 0.0;
  long shots = 0;
  std::uint64_t seed = 0;

  static NoiseSpec none() { return {}; }
  static NoiseSpec gaussian(double sigma, std::uint64_t seed = 0);
  static NoiseSpec with_shots(long n, std::uint64_t seed = 0);
  /// "none", "gaussian:<sigma>" or "shots:<n>".
  static NoiseSpec parse(const std::string& text, std::uint64_t seed = 0);
  void validate() const;
  std::string to_string() const;
};

/// rho (x) (1/2 + epsilon Sz).
Rho4 prepare_direct(const BlochState& state, double epsilon);

/// [arccos r]_y on qubit 1, [pi/2]_y on qubit 2, gradient, [theta]_(phi+pi/2)
/// on qubit 1.
PulseSequence preparation_sequence(const BlochState& state);

/// Runs preparation_sequence on the reference state 1/4 + Sz1/2.
Rho4 prepare_by_sequence(const BlochState& state);

/// Evolves rho0 with u and samples the four outcome probabilities.
/// Gaussian adds N(0, sigma) to each probability and renormalizes the sum;
/// Shots draws a multinomial sample and returns frequencies.
JointProbabilities measure(const Rho4& rho0, const Mat4& u, const NoiseSpec& noise);
JointProbabilities measure(const Rho4& rho0, const Propagator& u, const NoiseSpec& noise);

/// Perturbs exact probabilities according to noise (seeded by noise.seed).
JointProbabilities apply_noise(const JointProbabilities& exact, const NoiseSpec& noise);

struct ReadoutAmplitudes {
  std::array<double, 2> proton{};   // P(1,mu) - P(2,mu)
  std::array<double, 2> carbon{};   // P(mu,1) - P(mu,2)
  std::array<double, 4> populations{};     // diagonal after the readout pulses
  std::array<double, 4> lsqPopulations{};  // from the amplitudes plus normalization
};

/// [pi/2]_-y on both qubits, gradient, then line amplitudes.
ReadoutAmplitudes readout_amplitudes(const Rho4& rhoTau);
PulseSequence readout_sequence();

struct Method {
  enum class Kind { Analytic, Trotter, ExactDecomposition };
  Kind kind = Kind::Analytic;
  int segments = 0;

  static Method analytic() { return {}; }
  static Method trotter(int m);
  static Method exact() { return {Kind::ExactDecomposition, 0}; }
  /// "analytic", "trotter:<m>", "exact".
  static Method parse(const std::string& text);
  std::string to_string() const;
};

struct TomographyConfig {
  XyzParams params;
  double tau = 0.0;
  double epsilon = 0.0;
  Method method;
  NoiseSpec noise;
  NmrParams nmr;  // used by the exact decomposition
};

struct SweepRecord {
  BlochState input;
  Vec3 sIn = Vec3::Zero();
  Vec3 sOut = Vec3::Zero();
  double fidelity = 0.0;
  double distance = 0.0;
  bool nonPhysical = false;
};

/// Caches the designed transfer matrix and the realized propagator.
/// Reconstruction always inverts the designed (analytic) map.
class TomographyPipeline {
 public:
  /// Throws SingularTransfer if the designed map cannot be inverted.
  explicit TomographyPipeline(const TomographyConfig& config);

  /// `index` selects the noise stream: seed = derive_seed(noise.seed, index).
  SweepRecord run(const BlochState& state, std::uint64_t index = 0) const;

  const TransferMatrix& transfer() const { return tm_; }
  const Mat4& realized() const { return realized_; }
  const TomographyConfig& config() const { return config_; }

 private:
  TomographyConfig config_;
  TransferMatrix tm_;
  Mat4 realized_;
};

SweepRecord run_tomography(const BlochState& state, const TomographyConfig& config);

/// The standard three-measurement estimate: the Bloch vector itself.
Vec3 conventional_tomography(const BlochState& state);

/// Tr(rho sigma) / sqrt(Tr rho^2 Tr sigma^2) for qubit states given by Bloch vectors.
double state_fidelity(const Vec3& s, const Vec3& t);
/// |s - t| / 2.
double trace_distance(const Vec3& s, const Vec3& t);

struct GridAggregate {
  double r = 0.0;
  double fAvgFull = 0.0;  // phi in [0, 2 pi]
  double dAvgFull = 0.0;
  long countFull = 0;
  double fAvgHalf = 0.0;  // phi in [0, pi]
  double dAvgHalf = 0.0;
  long countHalf = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::vector<GridAggregate> aggregates;  // one per r
};

/// theta = 0..pi step pi/thetaDivisions, phi = 0..2pi step 2pi/phiDivisions,
/// both inclusive, for every r.
SweepResult sweep_bloch_grid(const TomographyConfig& config, const std::vector<double>& rValues,
                             int thetaDivisions = 8, int phiDivisions = 24);

/// Wootters concurrence.
double concurrence(const Rho4& rho);

/// The four initial states tracked in the concurrence plot.
std::array<BlochState, 4> tracked_states();

struct CurvePoint {
  double tau = 0.0;
  double absDelta = 0.0;
  double errorCoeff = 0.0;  // +inf where the map is singular
  double product = 0.0;     // errorCoeff * absDelta, +inf where singular
  std::array<double, 4> concurrence{};
};

/// tau_i = i tauMax / steps for i = 1..steps.
std::vector<double> tau_grid(double tauMax, int steps);

std::vector<CurvePoint> delta_error_curve(const XyzParams& params, double epsilon,
                                          const std::vector<double>& taus);

}  // namespace soqst
