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

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace soqst;
using namespace soqst::testing;

namespace {

bool fires(const FailureReport& r, const std::string& name) {
  return std::find(r.predicates.begin(), r.predicates.end(), name) != r.predicates.end();
}

std::vector<PureOptimumSpec> all_valid_specs() {
  std::vector<PureOptimumSpec> specs;
  for (int order = 0; order < 2; ++order) {
    for (int m = 0; m < 3; ++m) {
      for (int mask = 0; mask < 64; ++mask) {
        PureOptimumSpec s;
        if (order) std::swap(s.gamma1, s.gamma2);
        s.m = m;
        for (int k = 0; k < 6; ++k) s.signs[k] = (mask >> k) & 1 ? -1 : 1;
        const auto& g = s.signs;
        if (g[0] * g[1] == g[2] * g[3] && g[2] * g[3] == g[4] * g[5]) specs.push_back(s);
      }
    }
  }
  return specs;
}

}  // namespace

TEST_SUITE("optimize") {

TEST_CASE("default pure optimum matches the four-decimal coefficients") {
  const XyzParams p = pure_optimum_params(PureOptimumSpec{}, 1.0);
  CHECK(p.b1 == doctest::Approx(1.1458).epsilon(1e-3));
  CHECK(p.b2 == doctest::Approx(-0.2935).epsilon(1e-3));
  CHECK(p.jx == doctest::Approx(3.3820).epsilon(1e-3));
  CHECK(p.jy == doctest::Approx(-1.2747).epsilon(1e-3));
  CHECK(p.jz == 0.0);
}

TEST_CASE("every consistent pure-optimum spec reaches 1/(12 sqrt 3)") {
  const auto specs = all_valid_specs();
  CHECK(specs.size() == 2 * 3 * 16);
  for (const auto& s : specs) {
    for (double tau : {0.5, 1.0, 2.3}) {
      const XyzParams p = pure_optimum_params(s, tau);
      CHECK(std::abs(abs_delta_analytic(p, tau, 1.0) - pure_optimum_value()) < 1e-9);
    }
  }
}

TEST_CASE("pure optimum is independent of jz") {
  XyzParams p = pure_optimum_params(PureOptimumSpec{}, 1.0);
  for (int jz = -5; jz <= 5; ++jz) {
    p.jz = jz;
    CHECK(std::abs(abs_delta_analytic(p, 1.0, 1.0) - pure_optimum_value()) < 1e-12);
  }
}

TEST_CASE("pure optimum auxiliary angles") {
  for (const auto& s : all_valid_specs()) {
    CHECK(std::pow(std::sin(s.xi1() / 2), 2) == doctest::Approx(s.gamma1));
    CHECK(std::pow(std::sin(s.xi2() / 2), 2) == doctest::Approx(s.gamma2));
    CHECK(std::abs(std::sin(2 * s.lambda_angle())) == doctest::Approx(1.0));
    CHECK(std::abs(std::sin(s.xi1() / 2 - s.xi2() / 2)) == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(std::abs(std::sin(s.xi1() / 2 + s.xi2() / 2)) == doctest::Approx(1.0));
  }
}

TEST_CASE("invalid pure-optimum specs are rejected") {
  PureOptimumSpec bad;
  bad.gamma1 = 0.5;
  CHECK_THROWS_AS(pure_optimum_params(bad, 1.0), std::invalid_argument);
  PureOptimumSpec inconsistent;
  inconsistent.signs = {1, -1, 1, 1, 1, 1};
  CHECK_THROWS_AS(pure_optimum_params(inconsistent, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(pure_optimum_params(PureOptimumSpec{}, 0.0), std::invalid_argument);
}

TEST_CASE("disordered optima") {
  const double r2 = std::sqrt(2.0);
  const auto [pc, tc] = disordered_optimum_params(DisorderedModel::XZplus);
  CHECK(pc == XyzParams{r2, r2, 4 * r2, 0.0, 2.0});
  CHECK(tc == doctest::Approx(kPi / 4));
  CHECK(disordered_optimum_params(DisorderedModel::XXZ).first == XyzParams{r2, -r2, 2 * r2, 2 * r2, 2.0});
  CHECK(disordered_optimum_params(DisorderedModel::XYX).first ==
        XyzParams{r2, r2, 2.0, 2.0 * (1.0 - 2.0 * r2), 2.0});
  for (auto m : {DisorderedModel::XYX, DisorderedModel::XXZ, DisorderedModel::XZplus,
                 DisorderedModel::XZminus}) {
    const auto [p, tau] = disordered_optimum_params(m);
    CHECK(std::abs(abs_delta_analytic(p, tau, 0.0) - disordered_optimum_value()) < 1e-12);
    CHECK(parse_disordered_model(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_disordered_model("xy"), std::invalid_argument);
}

TEST_CASE("global search finds the known maxima") {
  const OptimizationResult r0 = maximize_delta(0.0, std::nullopt, 7, 40000);
  CHECK(std::abs(r0.absDelta - disordered_optimum_value()) < 1e-5);
  CHECK(r0.absDelta <= disordered_optimum_value() + 1e-9);
  CHECK(r0.evaluations <= 40000 + 200);
  const OptimizationResult r1 = maximize_delta(1.0, 1.0, 7, 40000);
  CHECK(std::abs(r1.absDelta - pure_optimum_value()) < 1e-5);
  CHECK(r1.absDelta <= pure_optimum_value() + 1e-9);
  CHECK(r1.tau == 1.0);
  CHECK(std::abs(abs_delta_analytic(r1.params, r1.tau, 1.0) - r1.absDelta) < 1e-12);
}

TEST_CASE("global search is deterministic per seed") {
  const OptimizationResult a = maximize_delta(0.4, std::nullopt, 99, 5000);
  const OptimizationResult b = maximize_delta(0.4, std::nullopt, 99, 5000);
  CHECK(a.params == b.params);
  CHECK(a.tau == b.tau);
  CHECK(a.absDelta == b.absDelta);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.converged == b.converged);
}

TEST_CASE("global search validates inputs") {
  CHECK_THROWS_AS(maximize_delta(1.2, std::nullopt, 0, 5000), std::invalid_argument);
  CHECK_THROWS_AS(maximize_delta(0.5, std::nullopt, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(maximize_delta(0.5, -1.0, 0, 5000), std::invalid_argument);
}

TEST_CASE("nelder-mead minimizes a quadratic") {
  auto f = [](const Eigen::VectorXd& x) { return (x.array() - 1.5).square().sum(); };
  NelderMeadOptions opt;
  opt.maxEvaluations = 5000;
  const NelderMeadResult r = nelder_mead(f, Eigen::VectorXd::Zero(3), opt);
  CHECK(r.converged);
  CHECK((r.x.array() - 1.5).abs().maxCoeff() < 1e-8);
}

TEST_CASE("NMR Hamiltonian is always singular") {
  const XyzParams p{2.0, -0.7, 0.0, 0.0, 1.3};
  for (int k = 1; k <= 100; ++k) {
    const double tau = 0.1 * k;
    const FailureReport r = failure_check(p, tau, 0.6);
    CHECK(fires(r, "noAnisotropy"));
    CHECK(r.isSingular);
    CHECK(abs_delta_analytic(p, tau, 0.6) < 1e-14);
  }
}

TEST_CASE("no external field is singular") {
  const XyzParams p{0.0, 0.0, 1.7, -0.4, 0.9};
  CHECK(fires(failure_check(p, 1.3, 0.8), "noAnisotropy"));
  CHECK(abs_delta_analytic(p, 1.3, 0.8) < 1e-14);
}

TEST_CASE("optimum is not flagged") {
  const auto [p, tau] = disordered_optimum_params(DisorderedModel::XZplus);
  const FailureReport r = failure_check(p, tau, 0.0);
  CHECK(r.predicates.empty());
  CHECK_FALSE(r.isSingular);
}

TEST_CASE("predicates are sound on their manifolds") {
  std::mt19937_64 rng(83);
  for (int n = 0; n < 100; ++n) {
    const double tau = uniform(rng, 0.05, 5), eps = uniform(rng, 0, 1);
    // Antisymmetric: theta2 = -theta1 and eta2 = eta1.
    const double eta = uniform(rng, 0.1, 4), th = uniform(rng, -3, 3);
    DerivedParams d;
    d.bAvg = eta * std::cos(th);
    d.jDiff = eta * std::sin(th);
    d.bDiff = eta * std::cos(-th);
    d.jAvg = 2.0 * eta * std::sin(-th);
    const XyzParams anti{d.bAvg + d.bDiff, d.bAvg - d.bDiff, d.jAvg + 2 * d.jDiff,
                         d.jAvg - 2 * d.jDiff, uniform(rng, -5, 5)};
    const FailureReport ra = failure_check(anti, tau, eps);
    CHECK(fires(ra, "antisymmetric"));
    CHECK(abs_delta_analytic(anti, tau, eps) < 1e-10);

    // zz period at epsilon = 0.
    XyzParams zz = random_params(rng);
    zz.jz = std::round(uniform(rng, -3, 3)) * kPi / tau;
    CHECK(fires(failure_check(zz, tau, 0.0), "zzPeriod"));
    CHECK(abs_delta_analytic(zz, tau, 0.0) < 1e-10);

    // Two of {jx, jy, b1, b2} vanish at epsilon = 0.
    XyzParams two = random_params(rng);
    double* fields[4] = {&two.jx, &two.jy, &two.b1, &two.b2};
    const int a = static_cast<int>(rng() % 4);
    const int b = (a + 1 + static_cast<int>(rng() % 3)) % 4;
    *fields[a] = 0.0;
    *fields[b] = 0.0;
    CHECK(fires(failure_check(two, tau, 0.0), "twoZero"));
    CHECK(abs_delta_analytic(two, tau, 0.0) < 1e-10);

    // gammaB = gammaJ = 0: b1 = b2 and jx = jy.
    const double bb = uniform(rng, -5, 5), jj = uniform(rng, -5, 5);
    const XyzParams iso{bb, bb, jj, jj, uniform(rng, -5, 5)};
    CHECK(fires(failure_check(iso, tau, eps), "noAnisotropy"));
    CHECK(abs_delta_analytic(iso, tau, eps) < 1e-10);
  }
}

}
