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

#include "soqst/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace soqst {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
  const int n = static_cast<int>(x0.size());
  long evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  };

  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (int i = 0; i < n; ++i) pts[i + 1](i) += options.initialStep;
  for (int i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

  std::vector<int> order(n + 1);
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
    {
      std::vector<Eigen::VectorXd> p2;
      std::vector<double> v2;
      for (int i : order) {
        p2.push_back(pts[i]);
        v2.push_back(vals[i]);
      }
      pts.swap(p2);
      vals.swap(v2);
    }

    double diameter = 0.0;
    for (int i = 1; i <= n; ++i) {
      diameter = std::max(diameter, (pts[i] - pts[0]).lpNorm<Eigen::Infinity>());
    }
    if (diameter < options.diameterTol) {
      converged = true;
      break;
    }
    if (evals >= options.maxEvaluations) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += pts[i];
    centroid /= n;

    const Eigen::VectorXd xr = centroid + (centroid - pts[n]);
    const double fr = eval(xr);
    if (fr < vals[0]) {
      const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[n]);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
      continue;
    }
    if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
      continue;
    }
    const bool outside = fr < vals[n];
    const Eigen::VectorXd xc =
        outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                : Eigen::VectorXd(centroid + 0.5 * (pts[n] - centroid));
    const double fc = eval(xc);
    if (fc < (outside ? fr : vals[n])) {
      pts[n] = xc;
      vals[n] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
      vals[i] = eval(pts[i]);
    }
  }

  NelderMeadResult r;
  r.x = pts[0];
  r.f = vals[0];
  r.evaluations = evals;
  r.converged = converged;
  return r;
}

}  // namespace soqst
