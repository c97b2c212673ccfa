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

#include "soqst/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "soqst/nelder_mead.hpp"
#include "soqst/seed.hpp"
#include "soqst/transfer.hpp"

namespace soqst {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGammaOffset = 0.28867513459481287;  // sqrt(3) / 6
constexpr double kPredicateTol = 1e-12;

// Scaled coordinates: (B, B gammaB, J, J gammaJ, Jz) times tau.
XyzParams from_scaled(const Eigen::VectorXd& y, double tau) {
  XyzParams p;
  p.b1 = (y(0) + y(1)) / tau;
  p.b2 = (y(0) - y(1)) / tau;
  p.jx = (y(2) + y(3)) / tau;
  p.jy = (y(2) - y(3)) / tau;
  p.jz = y(4) / tau;
  return p;
}

bool near(double a, double b) { return std::abs(a - b) < 1e-9; }

}  // namespace

double pure_optimum_value() { return 1.0 / (12.0 * std::sqrt(3.0)); }
double disordered_optimum_value() { return 1.0 / 32.0; }

void PureOptimumSpec::validate() const {
  const bool pairA = near(gamma1, 0.5 - kGammaOffset) && near(gamma2, 0.5 + kGammaOffset);
  const bool pairB = near(gamma1, 0.5 + kGammaOffset) && near(gamma2, 0.5 - kGammaOffset);
  if (!pairA && !pairB) {
    throw std::invalid_argument("PureOptimumSpec: (gamma1, gamma2) must be (1/2 -+ sqrt3/6, 1/2 +- sqrt3/6)");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("PureOptimumSpec: signs must be +1 or -1");
  }
  if (signs[0] * signs[1] != signs[2] * signs[3] || signs[2] * signs[3] != signs[4] * signs[5]) {
    throw std::invalid_argument(
        "PureOptimumSpec: sign set is not optimal (need s0 s1 = s2 s3 = s4 s5)");
  }
}

double PureOptimumSpec::xi1() const { return 2.0 * std::asin(std::sqrt(gamma1)); }
double PureOptimumSpec::xi2() const { return 2.0 * std::asin(std::sqrt(gamma2)); }

double PureOptimumSpec::lambda_angle() const {
  const double eta1Tau = m * kPi + signs[0] * 0.5 * std::acos(-gamma1);
  return std::asin(std::cos(eta1Tau) / std::cos(0.5 * xi1()));
}

XyzParams pure_optimum_params(const PureOptimumSpec& spec, double tau) {
  spec.validate();
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("pure_optimum_params: tau must be positive");
  }
  const double g1 = spec.gamma1, g2 = spec.gamma2;
  const auto& s = spec.signs;
  const double eta1 = (spec.m * kPi + s[0] * 0.5 * std::acos(-g1)) / tau;
  const double eta2 = (spec.m * kPi + s[1] * 0.5 * std::acos(-g2)) / tau;
  const double b = s[2] * eta1 * std::sqrt((1.0 - g1) / (1.0 + g1));
  const double bGamma = s[3] * eta2 * std::sqrt((1.0 - g2) / (1.0 + g2));
  const double j = s[4] * 2.0 * eta2 * std::sqrt(2.0 * g2 / (1.0 + g2));
  const double jGamma = s[5] * 2.0 * eta1 * std::sqrt(2.0 * g1 / (1.0 + g1));
  return {b + bGamma, b - bGamma, j + jGamma, j - jGamma, 0.0};
}

DisorderedModel parse_disordered_model(const std::string& name) {
  if (name == "xyx") return DisorderedModel::XYX;
  if (name == "xxz") return DisorderedModel::XXZ;
  if (name == "xz+") return DisorderedModel::XZplus;
  if (name == "xz-") return DisorderedModel::XZminus;
  throw std::invalid_argument("unknown model '" + name + "' (expected xyx, xxz, xz+, xz-)");
}

std::string to_string(DisorderedModel model) {
  switch (model) {
    case DisorderedModel::XYX: return "xyx";
    case DisorderedModel::XXZ: return "xxz";
    case DisorderedModel::XZplus: return "xz+";
    case DisorderedModel::XZminus: return "xz-";
  }
  return "?";
}

std::pair<XyzParams, double> disordered_optimum_params(DisorderedModel model) {
  const double r2 = std::sqrt(2.0);
  XyzParams p;
  switch (model) {
    case DisorderedModel::XYX: p = {r2, r2, 2.0, 2.0 * (1.0 - 2.0 * r2), 2.0}; break;
    case DisorderedModel::XXZ: p = {r2, -r2, 2.0 * r2, 2.0 * r2, 2.0}; break;
    case DisorderedModel::XZplus: p = {r2, r2, 4.0 * r2, 0.0, 2.0}; break;
    case DisorderedModel::XZminus: p = {r2, -r2, 4.0 * r2, 0.0, 2.0}; break;
  }
  return {p, kPi / 4.0};
}

OptimizationResult maximize_delta(double epsilon, std::optional<double> tauFixed,
                                  std::uint64_t seed, long budget) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("maximize_delta: epsilon must lie in [0, 1]");
  }
  if (budget < 1000) throw std::invalid_argument("maximize_delta: budget must be >= 1000");
  if (tauFixed && (!(*tauFixed > 0.0) || !std::isfinite(*tauFixed))) {
    throw std::invalid_argument("maximize_delta: tau must be positive");
  }

  const double box = 4.0 * kPi;
  long evals = 0;
  auto objective = [&](const Eigen::VectorXd& y) {
    ++evals;
    return -abs_delta_analytic(from_scaled(y, 1.0), 1.0, epsilon);
  };

  // Coarse phase: independent uniform draws in the scaled box.
  struct Candidate {
    Eigen::VectorXd y;
    double tau;
    double f;
  };
  const long coarse = budget / 5;
  constexpr std::size_t kStarts = 12;
  std::vector<Candidate> best;
  for (long i = 0; i < coarse; ++i) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::uniform_real_distribution<double> coord(-box, box);
    Eigen::VectorXd y(5);
    for (int k = 0; k < 5; ++k) y(k) = coord(rng);
    double tau = tauFixed.value_or(0.0);
    if (!tauFixed) {
      // (0, 2 pi]
      tau = 2.0 * kPi * (1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng));
    }
    const double f = objective(y);
    if (best.size() < kStarts || f < best.back().f) {
      best.push_back({y, tau, f});
      std::stable_sort(best.begin(), best.end(),
                       [](const Candidate& a, const Candidate& b) { return a.f < b.f; });
      if (best.size() > kStarts) best.pop_back();
    }
  }

  // Refinement: simplex descent from each of the best coarse points, then a
  // final polish of the winner with a small simplex.
  const long perStart = (budget - evals) / static_cast<long>(best.size() + 1);
  NelderMeadResult winner;
  double winnerTau = 0.0;
  bool haveWinner = false;
  for (const Candidate& c : best) {
    NelderMeadOptions opt;
    opt.initialStep = 0.3;
    opt.maxEvaluations = perStart;
    NelderMeadResult r = nelder_mead(objective, c.y, opt);
    if (!haveWinner || r.f < winner.f) {
      winner = r;
      winnerTau = c.tau;
      haveWinner = true;
    }
  }
  NelderMeadOptions polish;
  polish.initialStep = 1e-3;
  polish.maxEvaluations = std::max<long>(budget - evals, 0);
  if (polish.maxEvaluations > 0) {
    NelderMeadResult r = nelder_mead(objective, winner.x, polish);
    if (r.f <= winner.f) winner = r;
    else winner.converged = winner.converged || r.converged;
  }

  OptimizationResult out;
  out.tau = winnerTau;
  out.epsilon = epsilon;
  out.params = from_scaled(winner.x, winnerTau);
  out.absDelta = abs_delta_analytic(out.params, out.tau, epsilon);
  out.evaluations = evals;
  out.converged = winner.converged;
  return out;
}

FailureReport failure_check(const XyzParams& p, double tau, double epsilon) {
  AssistantState{epsilon}.validate();
  if (!std::isfinite(tau)) throw std::invalid_argument("failure_check: non-finite tau");
  const DerivedParams d = derive(p);
  const double s2t1 = std::sin(2.0 * d.theta1), s2t2 = std::sin(2.0 * d.theta2);
  const double se1 = std::abs(std::sin(d.eta1 * tau)), se2 = std::abs(std::sin(d.eta2 * tau));
  auto zero = [](double x) { return std::abs(x) < kPredicateTol; };

  FailureReport r;
  if (std::abs(s2t1) < kPredicateTol && std::abs(s2t2) < kPredicateTol) {
    r.predicates.push_back("noAnisotropy");
  }
  if (std::abs(s2t1 + s2t2) < 1e-10 && std::abs(se1 - se2) < 1e-10) {
    r.predicates.push_back("antisymmetric");
  }
  if (epsilon == 0.0 && std::abs(std::sin(p.jz * tau)) < 1e-9) {
    r.predicates.push_back("zzPeriod");
  }
  if (epsilon == 0.0) {
    const int zeros = zero(p.jx) + zero(p.jy) + zero(p.b1) + zero(p.b2);
    if (zeros >= 2) r.predicates.push_back("twoZero");
  }
  r.isSingular = !r.predicates.empty();
  return r;
}

}  // namespace soqst
