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

#include "soqst/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "soqst/seed.hpp"

namespace soqst {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

long parse_long(const std::string& text, const std::string& what) {
  long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

}  // namespace

void BlochState::validate() const {
  if (!std::isfinite(r) || !std::isfinite(theta) || !std::isfinite(phi)) {
    throw std::invalid_argument("BlochState: non-finite field");
  }
  if (r < 0.0 || r > 1.0) throw std::invalid_argument("BlochState: r must lie in [0, 1]");
}

Vec3 BlochState::vector() const {
  return r * Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

Rho2 BlochState::rho() const {
  validate();
  return Rho2(bloch_to_matrix(vector()));
}

NoiseSpec NoiseSpec::gaussian(double sigma, std::uint64_t seed) {
  NoiseSpec n{Kind::Gaussian, sigma, 0, seed};
  n.validate();
  return n;
}

NoiseSpec NoiseSpec::with_shots(long count, std::uint64_t seed) {
  NoiseSpec n{Kind::Shots, 0.0, count, seed};
  n.validate();
  return n;
}

NoiseSpec NoiseSpec::parse(const std::string& text, std::uint64_t seed) {
  if (text == "none") return none();
  if (text.rfind("gaussian:", 0) == 0) return gaussian(parse_double(text.substr(9), "sigma"), seed);
  if (text.rfind("shots:", 0) == 0) return with_shots(parse_long(text.substr(6), "shot count"), seed);
  throw std::invalid_argument("unknown noise '" + text + "' (expected none, gaussian:<s>, shots:<n>)");
}

void NoiseSpec::validate() const {
  if (kind == Kind::Gaussian && !(sigma >= 0.0 && std::isfinite(sigma))) {
    throw std::invalid_argument("NoiseSpec: sigma must be finite and >= 0");
  }
  if (kind == Kind::Shots && shots < 1) throw std::invalid_argument("NoiseSpec: shots must be >= 1");
}

std::string NoiseSpec::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Gaussian: return "gaussian:" + std::to_string(sigma);
    case Kind::Shots: return "shots:" + std::to_string(shots);
  }
  return "?";
}

Rho4 prepare_direct(const BlochState& state, double epsilon) {
  const AssistantState xi{epsilon};
  xi.validate();
  return Rho4(kron(state.rho().matrix(), xi.xi()));
}

PulseSequence preparation_sequence(const BlochState& state) {
  state.validate();
  PulseSequence s;
  s.rotate(Target::Qubit1, Axis::y(), std::acos(state.r));
  s.rotate(Target::Qubit2, Axis::y(), kPi / 2.0);
  s.gradient();
  s.rotate(Target::Qubit1, Axis::transverse(state.phi + kPi / 2.0), state.theta);
  return s;
}

Rho4 prepare_by_sequence(const BlochState& state) {
  const Mat4 reference = 0.25 * Mat4::Identity() + 0.5 * on_qubit1(spin::z());
  return compile(preparation_sequence(state)).apply(Rho4(reference));
}

JointProbabilities apply_noise(const JointProbabilities& exact, const NoiseSpec& noise) {
  noise.validate();
  std::mt19937_64 rng(noise.seed);
  switch (noise.kind) {
    case NoiseSpec::Kind::None: return exact;
    case NoiseSpec::Kind::Gaussian: {
      std::normal_distribution<double> n(0.0, noise.sigma);
      Eigen::Vector4d p = exact.as_vector();
      for (int k = 0; k < 4; ++k) p(k) += n(rng);
      const double sum = p.sum();
      if (sum != 0.0) p /= sum;
      return JointProbabilities::from_vector(p);
    }
    case NoiseSpec::Kind::Shots: {
      // Multinomial as a chain of binomials on the conditional probabilities.
      Eigen::Vector4d p = exact.as_vector().cwiseMax(0.0);
      p /= p.sum();
      Eigen::Vector4d counts = Eigen::Vector4d::Zero();
      long left = noise.shots;
      double massLeft = 1.0;
      for (int k = 0; k < 3 && left > 0; ++k) {
        const double q = massLeft > 0.0 ? std::clamp(p(k) / massLeft, 0.0, 1.0) : 0.0;
        std::binomial_distribution<long> b(left, q);
        const long c = b(rng);
        counts(k) = static_cast<double>(c);
        left -= c;
        massLeft -= p(k);
      }
      counts(3) = static_cast<double>(left);
      return JointProbabilities::from_vector(counts / static_cast<double>(noise.shots));
    }
  }
  return exact;
}

JointProbabilities measure(const Rho4& rho0, const Mat4& u, const NoiseSpec& noise) {
  const JointProbabilities exact = x_basis_probabilities(u * rho0.matrix() * u.adjoint());
  return apply_noise(exact, noise);
}

JointProbabilities measure(const Rho4& rho0, const Propagator& u, const NoiseSpec& noise) {
  return measure(rho0, u.u, noise);
}

PulseSequence readout_sequence() {
  PulseSequence s;
  s.rotate(Target::Both, Axis::minus_y(), kPi / 2.0);
  s.gradient();
  return s;
}

ReadoutAmplitudes readout_amplitudes(const Rho4& rhoTau) {
  const Mat4 after = compile(readout_sequence()).apply(rhoTau.matrix());
  ReadoutAmplitudes a;
  for (int k = 0; k < 4; ++k) a.populations[k] = after(k, k).real();
  const auto& p = a.populations;  // index 2 (k - 1) + (q - 1)
  a.proton = {p[0] - p[2], p[1] - p[3]};
  a.carbon = {p[0] - p[1], p[2] - p[3]};

  Eigen::Matrix<double, 5, 4> design;
  design << 1, 0, -1, 0,
            0, 1, 0, -1,
            1, -1, 0, 0,
            0, 0, 1, -1,
            1, 1, 1, 1;
  Eigen::Matrix<double, 5, 1> rhs;
  rhs << a.proton[0], a.proton[1], a.carbon[0], a.carbon[1], 1.0;
  const Eigen::Vector4d sol = design.colPivHouseholderQr().solve(rhs);
  for (int k = 0; k < 4; ++k) a.lsqPopulations[k] = sol(k);
  return a;
}

Method Method::trotter(int m) {
  if (m < 1) throw std::invalid_argument("trotter method needs at least one segment");
  return {Kind::Trotter, m};
}

Method Method::parse(const std::string& text) {
  if (text == "analytic") return analytic();
  if (text == "exact") return exact();
  if (text.rfind("trotter:", 0) == 0) {
    const long m = parse_long(text.substr(8), "segment count");
    if (m < 1 || m > 1000000) throw std::invalid_argument("trotter segment count out of range");
    return trotter(static_cast<int>(m));
  }
  throw std::invalid_argument("unknown method '" + text + "' (expected analytic, trotter:<m>, exact)");
}

std::string Method::to_string() const {
  switch (kind) {
    case Kind::Analytic: return "analytic";
    case Kind::Trotter: return "trotter:" + std::to_string(segments);
    case Kind::ExactDecomposition: return "exact";
  }
  return "?";
}

TomographyPipeline::TomographyPipeline(const TomographyConfig& config) : config_(config) {
  config_.params.validate();
  config_.noise.validate();
  const AssistantState xi{config_.epsilon};
  xi.validate();
  const Propagator designed = propagator_analytic(config_.params, config_.tau);
  tm_ = transfer_matrix(xi, designed);
  if (!(tm_.absDelta > kSingularThreshold)) {
    throw SingularTransfer("transfer matrix is singular for this configuration");
  }
  switch (config_.method.kind) {
    case Method::Kind::Analytic: realized_ = designed.u; break;
    case Method::Kind::Trotter:
      realized_ = trotter_unitary(config_.params, config_.tau, config_.method.segments);
      break;
    case Method::Kind::ExactDecomposition:
      realized_ = compile(exact_decomposition_sequence(config_.params, config_.tau, config_.nmr),
                          CompileMode::StrictUnitary)
                      .unitary();
      break;
  }
}

SweepRecord TomographyPipeline::run(const BlochState& state, std::uint64_t index) const {
  NoiseSpec noise = config_.noise;
  noise.seed = derive_seed(config_.noise.seed, index);
  const Rho4 rho0 = prepare_direct(state, config_.epsilon);
  const JointProbabilities probs = measure(rho0, realized_, noise);
  const Reconstruction rec = reconstruct(probs, tm_);

  SweepRecord out;
  out.input = state;
  out.sIn = state.vector();
  out.sOut = rec.s;
  out.nonPhysical = rec.nonPhysical;
  out.fidelity = state_fidelity(out.sIn, out.sOut);
  out.distance = trace_distance(out.sIn, out.sOut);
  return out;
}

SweepRecord run_tomography(const BlochState& state, const TomographyConfig& config) {
  return TomographyPipeline(config).run(state, 0);
}

Vec3 conventional_tomography(const BlochState& state) {
  return matrix_to_bloch(state.rho().matrix());
}

double state_fidelity(const Vec3& s, const Vec3& t) {
  const double num = 0.5 * (1.0 + s.dot(t));
  const double den = std::sqrt(0.5 * (1.0 + s.squaredNorm()) * 0.5 * (1.0 + t.squaredNorm()));
  return num / den;
}

double trace_distance(const Vec3& s, const Vec3& t) { return 0.5 * (s - t).norm(); }

SweepResult sweep_bloch_grid(const TomographyConfig& config, const std::vector<double>& rValues,
                             int thetaDivisions, int phiDivisions) {
  if (thetaDivisions < 1 || phiDivisions < 2) {
    throw std::invalid_argument("sweep_bloch_grid: grid too coarse");
  }
  const TomographyPipeline pipeline(config);
  SweepResult result;
  std::uint64_t index = 0;
  for (double r : rValues) {
    GridAggregate agg;
    agg.r = r;
    for (int it = 0; it <= thetaDivisions; ++it) {
      for (int ip = 0; ip <= phiDivisions; ++ip) {
        const BlochState s{r, kPi * it / thetaDivisions, 2.0 * kPi * ip / phiDivisions};
        s.validate();
        SweepRecord rec = pipeline.run(s, index++);
        agg.fAvgFull += rec.fidelity;
        agg.dAvgFull += rec.distance;
        ++agg.countFull;
        if (2 * ip <= phiDivisions) {
          agg.fAvgHalf += rec.fidelity;
          agg.dAvgHalf += rec.distance;
          ++agg.countHalf;
        }
        result.records.push_back(rec);
      }
    }
    agg.fAvgFull /= agg.countFull;
    agg.dAvgFull /= agg.countFull;
    agg.fAvgHalf /= agg.countHalf;
    agg.dAvgHalf /= agg.countHalf;
    result.aggregates.push_back(agg);
  }
  return result;
}

double concurrence(const Rho4& rho) {
  // Singular values of X^T (sy x sy) X with rho = X X^dagger are the
  // Wootters lambdas. Dropping null eigenvectors keeps pure states exact;
  // the square-root route leaves ~1e-8 of noise there.
  const Mat4& m = rho.matrix();
  const Mat4 yy = 4.0 * kron(spin::y(), spin::y());
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (m + m.adjoint()));
  Mat4 x = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const double w = es.eigenvalues()(k);
    if (w > 1e-14) x.col(k) = std::sqrt(w) * es.eigenvectors().col(k);
  }
  const Mat4 t = x.transpose() * yy * x;
  Eigen::Vector4d lam = Eigen::JacobiSVD<Mat4>(t).singularValues();
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

std::array<BlochState, 4> tracked_states() {
  return {BlochState{1.0, kPi / 2.0, 0.0}, BlochState{1.0, kPi / 2.0, kPi / 2.0},
          BlochState{1.0, 0.0, 0.0}, BlochState{0.8, kPi / 4.0, kPi / 6.0}};
}

std::vector<double> tau_grid(double tauMax, int steps) {
  if (!(tauMax > 0.0) || !std::isfinite(tauMax) || steps < 1) {
    throw std::invalid_argument("tau_grid: need tauMax > 0 and steps >= 1");
  }
  std::vector<double> taus(steps);
  for (int i = 0; i < steps; ++i) taus[i] = tauMax * (i + 1) / steps;
  return taus;
}

std::vector<CurvePoint> delta_error_curve(const XyzParams& params, double epsilon,
                                          const std::vector<double>& taus) {
  const AssistantState xi{epsilon};
  xi.validate();
  const auto states = tracked_states();
  std::array<Rho4, 4> initial{Rho4::maximally_mixed(), Rho4::maximally_mixed(),
                              Rho4::maximally_mixed(), Rho4::maximally_mixed()};
  for (int k = 0; k < 4; ++k) initial[k] = prepare_direct(states[k], epsilon);

  std::vector<CurvePoint> out;
  out.reserve(taus.size());
  const double inf = std::numeric_limits<double>::infinity();
  for (double tau : taus) {
    const Propagator u = propagator_analytic(params, tau);
    const TransferMatrix tm = transfer_matrix(xi, u);
    CurvePoint pt;
    pt.tau = tau;
    pt.absDelta = tm.absDelta;
    try {
      pt.errorCoeff = error_coefficients(tm).e;
      pt.product = pt.errorCoeff * pt.absDelta;
    } catch (const SingularTransfer&) {
      pt.errorCoeff = inf;
      pt.product = inf;
    }
    for (int k = 0; k < 4; ++k) {
      const Mat4 r = u.u * initial[k].matrix() * u.u.adjoint();
      pt.concurrence[k] = concurrence(Rho4(0.5 * (r + r.adjoint())));
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace soqst
