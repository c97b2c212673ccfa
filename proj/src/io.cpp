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

#include "soqst/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <unistd.h>

namespace soqst {

using nlohmann::json;

namespace {

void require_keys(const json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected a JSON object");
  for (const char* k : keys) {
    if (!j.contains(k)) throw std::invalid_argument(std::string(what) + ": missing key '" + k + "'");
    if (!j.at(k).is_number()) {
      throw std::invalid_argument(std::string(what) + ": key '" + k + "' must be a number");
    }
  }
  if (j.size() != keys.size()) {
    for (const auto& item : j.items()) {
      bool known = false;
      for (const char* k : keys) known = known || item.key() == k;
      if (!known) throw std::invalid_argument(std::string(what) + ": unknown key '" + item.key() + "'");
    }
  }
}

double finite(const json& j, const char* key) {
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite value for ") + key);
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

json to_json(const XyzParams& p) {
  return {{"b1", p.b1}, {"b2", p.b2}, {"jx", p.jx}, {"jy", p.jy}, {"jz", p.jz}};
}

XyzParams params_from_json(const json& j) {
  require_keys(j, {"b1", "b2", "jx", "jy", "jz"}, "params");
  return {finite(j, "b1"), finite(j, "b2"), finite(j, "jx"), finite(j, "jy"), finite(j, "jz")};
}

json to_json(const JointProbabilities& p) {
  return {{"p11", p.p11}, {"p12", p.p12}, {"p21", p.p21}, {"p22", p.p22}};
}

JointProbabilities probabilities_from_json(const json& j) {
  require_keys(j, {"p11", "p12", "p21", "p22"}, "probabilities");
  return {finite(j, "p11"), finite(j, "p12"), finite(j, "p21"), finite(j, "p22")};
}

json to_json(const NmrParams& p) {
  return {{"omega1", p.omega1}, {"omega2", p.omega2}, {"j12Hz", p.j12Hz}};
}

NmrParams nmr_from_json(const json& j) {
  require_keys(j, {"omega1", "omega2", "j12Hz"}, "nmr");
  return {finite(j, "omega1"), finite(j, "omega2"), finite(j, "j12Hz")};
}

json to_json(const OptimizationResult& r) {
  return {{"params", to_json(r.params)}, {"tau", r.tau},           {"epsilon", r.epsilon},
          {"absDelta", r.absDelta},      {"converged", r.converged}, {"evaluations", r.evaluations}};
}

json to_json(const FailureReport& r) {
  return {{"predicates", r.predicates}, {"isSingular", r.isSingular}};
}

json to_json(const Spectrum& s) {
  json vecs = json::array();
  for (const auto& v : s.vectors) vecs.push_back({v(0), v(1), v(2), v(3)});
  return {{"lambdas", s.lambdas}, {"vectors", vecs}};
}

json to_json(const Vec3& v) { return {{"sx", v.x()}, {"sy", v.y()}, {"sz", v.z()}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

json load_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  const std::string body =
      (first != std::string::npos && text[first] == '{') ? text : read_file(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("error while writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path + "'");
  }
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string out = "r,theta,phi,sx_in,sy_in,sz_in,sx_out,sy_out,sz_out,fidelity,distance\n";
  for (const SweepRecord& r : records) {
    const double row[] = {r.input.r,  r.input.theta, r.input.phi, r.sIn.x(),   r.sIn.y(), r.sIn.z(),
                          r.sOut.x(), r.sOut.y(),    r.sOut.z(),  r.fidelity, r.distance};
    for (std::size_t k = 0; k < std::size(row); ++k) {
      if (k) out += ',';
      out += format_double(row[k]);
    }
    out += '\n';
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::string out = "tau,abs_delta,error_coeff,product,c_state1,c_state2,c_state3,c_state4\n";
  for (const CurvePoint& p : points) {
    out += format_double(p.tau) + ',' + format_double(p.absDelta) + ',' +
           format_double(p.errorCoeff) + ',' + format_double(p.product);
    for (double c : p.concurrence) out += ',' + format_double(c);
    out += '\n';
  }
  return out;
}

std::string deltamax_csv(const std::vector<DeltaMaxPoint>& points) {
  std::string out = "epsilon,abs_delta_max,tau,b1,b2,jx,jy,jz,evaluations,converged\n";
  for (const DeltaMaxPoint& p : points) {
    const auto& r = p.result;
    out += format_double(p.epsilon) + ',' + format_double(r.absDelta) + ',' + format_double(r.tau) +
           ',' + format_double(r.params.b1) + ',' + format_double(r.params.b2) + ',' +
           format_double(r.params.jx) + ',' + format_double(r.params.jy) + ',' +
           format_double(r.params.jz) + ',' + std::to_string(r.evaluations) + ',' +
           (r.converged ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace soqst
