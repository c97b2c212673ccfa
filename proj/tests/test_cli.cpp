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
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "helpers.hpp"

using namespace soqst;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kModelC = R"({"b1":1.4142135623730951,"b2":1.4142135623730951,"jx":5.656854249492381,"jy":0,"jz":2})";

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("soqst_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("delta of the XZ optimum") {
  const Outcome r = invoke({"delta", "--params", kModelC, "--tau", "0.7853981633974483", "--epsilon", "0"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["absDelta"].get<double>() == doctest::Approx(1.0 / 32));
}

TEST_CASE("optimum models") {
  for (const char* m : {"xyx", "xxz", "xz+", "xz-"}) {
    const Outcome r = invoke({"optimum", "--model", m});
    REQUIRE(r.code == cli::kOk);
    CHECK(nlohmann::json::parse(r.out)["absDelta"].get<double>() == doctest::Approx(1.0 / 32));
  }
  const Outcome pure = invoke({"optimum", "--model", "pure", "--gamma-order", "minus-first"});
  REQUIRE(pure.code == cli::kOk);
  CHECK(nlohmann::json::parse(pure.out)["absDelta"].get<double>() ==
        doctest::Approx(pure_optimum_value()));
  CHECK(invoke({"optimum", "--model", "pure", "--signs", "1,-1,1,1,1,1"}).code == cli::kArgumentError);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::vector<std::string> args{"optimize", "--epsilon", "0.5", "--seed", "3", "--budget", "2000"};
  const Outcome a = invoke(args), b = invoke(args);
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);

  const fs::path dir = scratch();
  const std::string csv1 = (dir / "s1.csv").string(), csv2 = (dir / "s2.csv").string();
  auto sweep = [&](const std::string& path) {
    return invoke({"sweep", "--params", kModelC, "--tau", "0.7853981633974483", "--epsilon", "0",
                   "--noise", "gaussian:0.01", "--seed", "11", "--r", "1,0.5", "--out", path});
  };
  REQUIRE(sweep(csv1).code == cli::kOk);
  REQUIRE(sweep(csv2).code == cli::kOk);
  CHECK(read_file(csv1) == read_file(csv2));
  fs::remove_all(dir);
}

TEST_CASE("curve writes one row per tau") {
  const fs::path dir = scratch();
  const std::string path = (dir / "curve.csv").string();
  const Outcome r = invoke({"curve", "--params", kModelC, "--epsilon", "0", "--steps", "40", "--out", path});
  REQUIRE(r.code == cli::kOk);
  const std::string text = read_file(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 41);
  fs::remove_all(dir);
}

TEST_CASE("pulse dump") {
  const Outcome r = invoke({"pulse", "--params", kModelC, "--tau", "0.7853981633974483", "--method", "exact"});
  REQUIRE(r.code == cli::kOk);
  CHECK(r.out.find("rot q=both") != std::string::npos);
  const auto at = r.out.find("# fidelity magnitude=");
  REQUIRE(at != std::string::npos);
  CHECK(std::stod(r.out.substr(at + 21)) == doctest::Approx(1.0).epsilon(1e-12));
  const Outcome bad = invoke({"pulse", "--params", R"({"b1":1,"b2":1,"jx":1,"jy":1,"jz":1})",
                              "--tau", "1", "--method", "trotter:2"});
  CHECK(bad.code == cli::kArgumentError);
}

TEST_CASE("trotter fidelity") {
  const Outcome r = invoke({"trotter", "--model", "xz+", "--segments", "2"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["fidelity"]["magnitude"].get<double>() == doctest::Approx(0.9979055).epsilon(1e-6));
}

TEST_CASE("reconstruct") {
  const Outcome r = invoke({"reconstruct", "--probs", R"({"p11":0.375,"p12":0.125,"p21":0.125,"p22":0.375})",
                            "--params", kModelC, "--tau", "0.7853981633974483", "--epsilon", "0"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sz"].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j["sx"].get<double>()) < 1e-12);
  CHECK_FALSE(j["nonPhysical"].get<bool>());
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::kArgumentError);
  CHECK(invoke({"bogus"}).code == cli::kArgumentError);
  CHECK(invoke({"delta", "--params", kModelC, "--tau", "1"}).code == cli::kArgumentError);
  CHECK(invoke({"delta", "--params", kModelC, "--tau", "1", "--epsilon", "2"}).code ==
        cli::kArgumentError);
  CHECK(invoke({"reconstruct", "--probs", R"({"p11":0.25,"p12":0.25,"p21":0.25,"p22":0.25})",
                "--params", kModelC, "--tau", "0", "--epsilon", "0"})
            .code == cli::kSingular);
  CHECK(invoke({"spectrum", "--params", "/nonexistent/params.json"}).code == cli::kIoError);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

}
