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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "soqst/soqst.hpp"

namespace soqst::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string params;
  std::string probs;
  std::string model;
  std::string method = "analytic";
  std::string noise = "none";
  std::string out;
  std::string rValues = "1,0.5";
  std::string signs = "+,+,+,+,+,+";
  std::string gammaOrder = "plus-first";
  double tau = std::nan("");
  double epsilon = 0.0;
  double tauMax = 2.0 * kPi;
  double j12 = kDefaultJ12Hz;
  int segments = 2;
  int steps = 500;
  int m = 0;
  long budget = 200000;
  std::uint64_t seed = 0;
};

void require_tau(const Options& o, bool positive) {
  if (!std::isfinite(o.tau)) throw std::invalid_argument("--tau must be a finite number");
  if (positive && !(o.tau > 0.0)) throw std::invalid_argument("--tau must be positive");
}

void require_epsilon(const Options& o) {
  if (!(o.epsilon >= 0.0 && o.epsilon <= 1.0)) {
    throw std::invalid_argument("--epsilon must lie in [0, 1]");
  }
}

XyzParams load_params(const Options& o) {
  if (o.params.empty()) throw std::invalid_argument("--params is required");
  return params_from_json(load_json_argument(o.params));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number '" + item + "' in list");
    }
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "' in list");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

std::array<int, 6> parse_signs(const std::string& text) {
  std::array<int, 6> s{};
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 6) throw std::invalid_argument("--signs needs exactly six entries");
    if (item == "+" || item == "+1" || item == "1") s[k++] = 1;
    else if (item == "-" || item == "-1") s[k++] = -1;
    else throw std::invalid_argument("bad sign '" + item + "'");
  }
  if (k != 6) throw std::invalid_argument("--signs needs exactly six entries");
  return s;
}

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_spectrum(const Options& o, std::ostream& out) {
  const XyzParams p = load_params(o);
  const DerivedParams d = derive(p);
  json j = to_json(spectrum(p));
  j["derived"] = {{"bAvg", d.bAvg},   {"bDiff", d.bDiff}, {"jAvg", d.jAvg},
                  {"jDiff", d.jDiff}, {"eta1", d.eta1},   {"eta2", d.eta2},
                  {"theta1", d.theta1}, {"theta2", d.theta2}};
  emit(out, j);
  return kOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  require_tau(o, false);
  require_epsilon(o);
  const XyzParams p = load_params(o);
  const TransferMatrix tm = transfer_matrix(AssistantState{o.epsilon}, propagator_analytic(p, o.tau));
  const double analytic = abs_delta_analytic(p, o.tau, o.epsilon);
  emit(out, {{"absDelta", analytic},
             {"absDeltaBruteForce", tm.absDelta},
             {"delta", complex_json(tm.delta)},
             {"difference", std::abs(analytic - tm.absDelta)}});
  return kOk;
}

int cmd_optimize(const Options& o, std::ostream& out, bool tauGiven) {
  require_epsilon(o);
  if (tauGiven) require_tau(o, true);
  if (o.budget < 1000) throw std::invalid_argument("--budget must be >= 1000");
  const auto tau = tauGiven ? std::optional<double>(o.tau) : std::nullopt;
  emit(out, to_json(maximize_delta(o.epsilon, tau, o.seed, o.budget)));
  return kOk;
}

int cmd_optimum(const Options& o, std::ostream& out, bool tauGiven) {
  XyzParams p;
  double tau = 0.0;
  double eps = 0.0;
  if (o.model == "pure") {
    PureOptimumSpec spec;
    if (o.gammaOrder == "minus-first") std::swap(spec.gamma1, spec.gamma2);
    else if (o.gammaOrder != "plus-first") {
      throw std::invalid_argument("--gamma-order must be plus-first or minus-first");
    }
    spec.m = o.m;
    spec.signs = parse_signs(o.signs);
    tau = tauGiven ? o.tau : 1.0;
    if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("--tau must be positive");
    p = pure_optimum_params(spec, tau);
    eps = 1.0;
  } else {
    std::tie(p, tau) = disordered_optimum_params(parse_disordered_model(o.model));
  }
  const TransferMatrix tm = transfer_matrix(AssistantState{eps}, propagator_analytic(p, tau));
  emit(out, {{"model", o.model},
             {"params", to_json(p)},
             {"tau", tau},
             {"epsilon", eps},
             {"absDelta", abs_delta_analytic(p, tau, eps)},
             {"absDeltaBruteForce", tm.absDelta}});
  return kOk;
}

int cmd_failure(const Options& o, std::ostream& out) {
  require_tau(o, false);
  require_epsilon(o);
  const XyzParams p = load_params(o);
  json j = to_json(failure_check(p, o.tau, o.epsilon));
  j["absDelta"] = abs_delta_analytic(p, o.tau, o.epsilon);
  emit(out, j);
  return kOk;
}

int cmd_trotter(const Options& o, std::ostream& out, bool tauGiven) {
  if (o.segments < 1) throw std::invalid_argument("--segments must be >= 1");
  auto [p, tau] = disordered_optimum_params(parse_disordered_model(o.model));
  if (tauGiven) {
    require_tau(o, true);
    tau = o.tau;
  }
  const Mat4 exact = propagator_analytic(p, tau).u;
  const GateFidelity f = gate_fidelity(exact, trotter_unitary(p, tau, o.segments));
  json j = {{"model", o.model},
            {"tau", tau},
            {"segments", o.segments},
            {"fidelity", {{"raw", complex_json(f.raw)},
                          {"magnitude", f.magnitude},
                          {"magnitudeSquared", f.magnitudeSquared}}}};
  try {
    const Mat4 seq = compile(trotter_sequence(p, tau, o.segments, o.j12), CompileMode::StrictUnitary).unitary();
    j["pulseSequenceFidelity"] = gate_fidelity(exact, seq).magnitude;
  } catch (const UnsupportedModel&) {
    j["pulseSequenceFidelity"] = nullptr;
  }
  emit(out, j);
  return kOk;
}

int cmd_pulse(const Options& o, std::ostream& out) {
  require_tau(o, false);
  const XyzParams p = load_params(o);
  const Method method = Method::parse(o.method);
  PulseSequence seq;
  switch (method.kind) {
    case Method::Kind::Trotter: seq = trotter_sequence(p, o.tau, method.segments, o.j12); break;
    case Method::Kind::ExactDecomposition: {
      NmrParams nmr;
      nmr.j12Hz = o.j12;
      seq = exact_decomposition_sequence(p, o.tau, nmr);
      break;
    }
    case Method::Kind::Analytic:
      throw std::invalid_argument("--method must be trotter:<m> or exact");
  }
  const Mat4 u = compile(seq, CompileMode::StrictUnitary).unitary();
  const GateFidelity f = gate_fidelity(propagator_analytic(p, o.tau).u, u);
  out << dump(seq);
  out << "# fidelity magnitude=" << format_double(f.magnitude)
      << " magnitude_squared=" << format_double(f.magnitudeSquared)
      << " raw_re=" << format_double(f.raw.real()) << " raw_im=" << format_double(f.raw.imag())
      << '\n';
  return kOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  require_tau(o, false);
  require_epsilon(o);
  const XyzParams p = load_params(o);
  if (o.probs.empty()) throw std::invalid_argument("--probs is required");
  const JointProbabilities probs = probabilities_from_json(load_json_argument(o.probs));
  const TransferMatrix tm = transfer_matrix(AssistantState{o.epsilon}, propagator_analytic(p, o.tau));
  const Reconstruction r = reconstruct(probs, tm);
  json j = to_json(r.s);
  j["norm"] = r.s.norm();
  j["nonPhysical"] = r.nonPhysical;
  emit(out, j);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  require_tau(o, false);
  require_epsilon(o);
  if (o.out.empty()) throw std::invalid_argument("--out is required");
  TomographyConfig cfg;
  cfg.params = load_params(o);
  cfg.tau = o.tau;
  cfg.epsilon = o.epsilon;
  cfg.method = Method::parse(o.method);
  cfg.noise = NoiseSpec::parse(o.noise, o.seed);
  cfg.nmr.j12Hz = o.j12;
  const std::vector<double> rs = parse_list(o.rValues);
  for (double r : rs) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("--r values must lie in [0, 1]");
  }
  const SweepResult res = sweep_bloch_grid(cfg, rs);
  write_file_atomic(o.out, sweep_csv(res.records));
  json aggs = json::array();
  for (const GridAggregate& a : res.aggregates) {
    aggs.push_back({{"r", a.r},
                    {"fAvg", a.fAvgFull},
                    {"dAvg", a.dAvgFull},
                    {"count", a.countFull},
                    {"fAvgHalfPhi", a.fAvgHalf},
                    {"dAvgHalfPhi", a.dAvgHalf},
                    {"countHalfPhi", a.countHalf}});
  }
  emit(out, {{"out", o.out}, {"records", res.records.size()}, {"aggregates", aggs}});
  return kOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
  require_epsilon(o);
  if (o.out.empty()) throw std::invalid_argument("--out is required");
  if (o.steps < 1) throw std::invalid_argument("--steps must be >= 1");
  if (!(o.tauMax > 0.0) || !std::isfinite(o.tauMax)) {
    throw std::invalid_argument("--tau-max must be positive");
  }
  const XyzParams p = load_params(o);
  const auto pts = delta_error_curve(p, o.epsilon, tau_grid(o.tauMax, o.steps));
  write_file_atomic(o.out, curve_csv(pts));
  emit(out, {{"out", o.out}, {"points", pts.size()}});
  return kOk;
}

int cmd_deltamax(const Options& o, std::ostream& out) {
  if (o.out.empty()) throw std::invalid_argument("--out is required");
  if (o.steps < 1 || o.steps > 1000) throw std::invalid_argument("--steps must lie in [1, 1000]");
  if (o.budget < 1000) throw std::invalid_argument("--budget must be >= 1000");
  std::vector<DeltaMaxPoint> pts;
  for (int i = 0; i <= o.steps; ++i) {
    const double eps = static_cast<double>(i) / o.steps;
    pts.push_back({eps, maximize_delta(eps, std::nullopt, o.seed, o.budget)});
  }
  write_file_atomic(o.out, deltamax_csv(pts));
  json vals = json::array();
  for (const auto& pt : pts) vals.push_back({{"epsilon", pt.epsilon}, {"absDeltaMax", pt.result.absDelta}});
  emit(out, {{"out", o.out}, {"points", vals}});
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-observable qubit state measurement toolkit", "soqst"};
  app.require_subcommand(1);
  Options o;

  auto addParams = [&](CLI::App* c) {
    c->add_option("--params", o.params, "Hamiltonian JSON (inline or file path)")->required();
  };
  auto addTau = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--tau", o.tau, "Coupling time");
    if (required) opt->required();
    return opt;
  };
  auto addEps = [&](CLI::App* c) {
    c->add_option("--epsilon", o.epsilon, "Assistant polarization in [0, 1]")->required();
  };

  auto* spectrumCmd = app.add_subcommand("spectrum", "Closed-form eigensystem");
  addParams(spectrumCmd);

  auto* deltaCmd = app.add_subcommand("delta", "Transfer-matrix determinant");
  addParams(deltaCmd);
  addTau(deltaCmd, true);
  addEps(deltaCmd);

  auto* optimizeCmd = app.add_subcommand("optimize", "Maximize |Delta|");
  addEps(optimizeCmd);
  auto* optTau = addTau(optimizeCmd, false);
  optimizeCmd->add_option("--seed", o.seed, "Random seed");
  optimizeCmd->add_option("--budget", o.budget, "Evaluation budget");

  auto* optimumCmd = app.add_subcommand("optimum", "Analytic optimal Hamiltonians");
  optimumCmd->add_option("--model", o.model, "xyx, xxz, xz+, xz- or pure")
      ->required()
      ->check(CLI::IsMember({"xyx", "xxz", "xz+", "xz-", "pure"}));
  auto* optimumTau = addTau(optimumCmd, false);
  optimumCmd->add_option("--m", o.m, "Period index of the pure optimum");
  optimumCmd->add_option("--signs", o.signs, "Six comma-separated signs for the pure optimum");
  optimumCmd->add_option("--gamma-order", o.gammaOrder, "plus-first or minus-first");

  auto* failureCmd = app.add_subcommand("failure", "Failure predicates");
  addParams(failureCmd);
  addTau(failureCmd, true);
  addEps(failureCmd);

  auto* trotterCmd = app.add_subcommand("trotter", "Trotter gate fidelity");
  trotterCmd->add_option("--model", o.model, "xyx, xxz, xz+ or xz-")
      ->required()
      ->check(CLI::IsMember({"xyx", "xxz", "xz+", "xz-"}));
  trotterCmd->add_option("--segments", o.segments, "Number of segments")->required();
  auto* trotterTau = addTau(trotterCmd, false);
  trotterCmd->add_option("--j12", o.j12, "Scalar coupling in Hz");

  auto* pulseCmd = app.add_subcommand("pulse", "Pulse sequence dump and fidelity");
  addParams(pulseCmd);
  addTau(pulseCmd, true);
  pulseCmd->add_option("--method", o.method, "trotter:<m> or exact")->required();
  pulseCmd->add_option("--j12", o.j12, "Scalar coupling in Hz");

  auto* reconstructCmd = app.add_subcommand("reconstruct", "Invert joint probabilities");
  reconstructCmd->add_option("--probs", o.probs, "Probability JSON (inline or file path)")->required();
  addParams(reconstructCmd);
  addTau(reconstructCmd, true);
  addEps(reconstructCmd);

  auto* sweepCmd = app.add_subcommand("sweep", "Bloch-grid tomography sweep");
  addParams(sweepCmd);
  addTau(sweepCmd, true);
  addEps(sweepCmd);
  sweepCmd->add_option("--method", o.method, "analytic, trotter:<m> or exact");
  sweepCmd->add_option("--noise", o.noise, "none, gaussian:<sigma> or shots:<n>");
  sweepCmd->add_option("--r", o.rValues, "Comma-separated Bloch radii");
  sweepCmd->add_option("--out", o.out, "CSV output path")->required();
  sweepCmd->add_option("--seed", o.seed, "Random seed");
  sweepCmd->add_option("--j12", o.j12, "Scalar coupling in Hz");

  auto* curveCmd = app.add_subcommand("curve", "Determinant, error and concurrence versus tau");
  addParams(curveCmd);
  addEps(curveCmd);
  curveCmd->add_option("--tau-max", o.tauMax, "Largest tau");
  curveCmd->add_option("--steps", o.steps, "Number of grid points");
  curveCmd->add_option("--out", o.out, "CSV output path")->required();

  auto* deltamaxCmd = app.add_subcommand("deltamax", "Largest |Delta| versus epsilon");
  deltamaxCmd->add_option("--steps", o.steps, "Number of epsilon intervals")->required();
  deltamaxCmd->add_option("--seed", o.seed, "Random seed");
  deltamaxCmd->add_option("--budget", o.budget, "Evaluation budget per point");
  deltamaxCmd->add_option("--out", o.out, "CSV output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    if (*spectrumCmd) return cmd_spectrum(o, out);
    if (*deltaCmd) return cmd_delta(o, out);
    if (*optimizeCmd) return cmd_optimize(o, out, optTau->count() > 0);
    if (*optimumCmd) return cmd_optimum(o, out, optimumTau->count() > 0);
    if (*failureCmd) return cmd_failure(o, out);
    if (*trotterCmd) return cmd_trotter(o, out, trotterTau->count() > 0);
    if (*pulseCmd) return cmd_pulse(o, out);
    if (*reconstructCmd) return cmd_reconstruct(o, out);
    if (*sweepCmd) return cmd_sweep(o, out);
    if (*curveCmd) return cmd_curve(o, out);
    if (*deltamaxCmd) return cmd_deltamax(o, out);
  } catch (const SingularTransfer& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }
  err << "error: no subcommand\n";
  return kArgumentError;
}

}  // namespace soqst::cli
