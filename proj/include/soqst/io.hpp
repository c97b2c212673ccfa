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

// JSON and CSV serialization. Doubles are written as the shortest decimal
// that round-trips, so outputs are byte-stable across platforms.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "soqst/experiment.hpp"
#include "soqst/optimize.hpp"

namespace soqst {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);

nlohmann::json to_json(const XyzParams& p);
/// Requires exactly the keys b1, b2, jx, jy, jz with numeric values.
XyzParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const JointProbabilities& p);
/// Requires exactly the keys p11, p12, p21, p22 with numeric values.
JointProbabilities probabilities_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NmrParams& p);
NmrParams nmr_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OptimizationResult& r);
nlohmann::json to_json(const FailureReport& r);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const Vec3& v);

/// Accepts inline JSON (starting with '{') or a path to a JSON file.
/// Throws IoError for unreadable files, std::invalid_argument for bad content.
nlohmann::json load_json_argument(const std::string& text);

std::string read_file(const std::string& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

std::string sweep_csv(const std::vector<SweepRecord>& records);
std::string curve_csv(const std::vector<CurvePoint>& points);

struct DeltaMaxPoint {
  double epsilon = 0.0;
  OptimizationResult result;
};
std::string deltamax_csv(const std::vector<DeltaMaxPoint>& points);

}  // namespace soqst
