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

#include <functional>

#include <Eigen/Dense>

namespace soqst {

struct NelderMeadOptions {
  double initialStep = 0.1;
  double diameterTol = 1e-9;  // converged when every vertex is this close to the best
  long maxEvaluations = 10000;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double f = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Minimizes f with the standard simplex method (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). Deterministic.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options);

}  // namespace soqst
