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


#include <numbers>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "soqst/soqst.hpp"

namespace py = pybind11;
using namespace soqst;

namespace {

JointProbabilities probs_from(const std::array<double, 4>& p) { return {p[0], p[1], p[2], p[3]}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-observable qubit state measurement";

  py::register_exception<SingularTransfer>(m, "SingularTransfer", PyExc_ArithmeticError);
  py::register_exception<UnsupportedModel>(m, "UnsupportedModel", PyExc_ValueError);
  py::register_exception<ModeError>(m, "ModeError", PyExc_RuntimeError);

  py::class_<XyzParams>(m, "XyzParams")
      .def(py::init<double, double, double, double, double>(), py::arg("b1") = 0.0,
           py::arg("b2") = 0.0, py::arg("jx") = 0.0, py::arg("jy") = 0.0, py::arg("jz") = 0.0)
      .def_readwrite("b1", &XyzParams::b1)
      .def_readwrite("b2", &XyzParams::b2)
      .def_readwrite("jx", &XyzParams::jx)
      .def_readwrite("jy", &XyzParams::jy)
      .def_readwrite("jz", &XyzParams::jz)
      .def("__eq__", [](const XyzParams& a, const XyzParams& b) { return a == b; })
      .def("__repr__", [](const XyzParams& p) {
        return "XyzParams(b1=" + format_double(p.b1) + ", b2=" + format_double(p.b2) +
               ", jx=" + format_double(p.jx) + ", jy=" + format_double(p.jy) +
               ", jz=" + format_double(p.jz) + ")";
      });

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("b_avg", &DerivedParams::bAvg)
      .def_readonly("b_diff", &DerivedParams::bDiff)
      .def_readonly("j_avg", &DerivedParams::jAvg)
      .def_readonly("j_diff", &DerivedParams::jDiff)
      .def_readonly("eta1", &DerivedParams::eta1)
      .def_readonly("eta2", &DerivedParams::eta2)
      .def_readonly("theta1", &DerivedParams::theta1)
      .def_readonly("theta2", &DerivedParams::theta2);

  m.def("hamiltonian", &hamiltonian_matrix, py::arg("params"));
  m.def("derive", &derive, py::arg("params"));
  m.def(
      "spectrum",
      [](const XyzParams& p) {
        const Spectrum s = spectrum(p);
        Eigen::Matrix4d vecs;
        for (int k = 0; k < 4; ++k) vecs.col(k) = s.vectors[k];
        return py::make_tuple(s.lambdas, vecs);
      },
      py::arg("params"), "Eigenvalues and eigenvectors (as columns).");
  m.def(
      "propagator", [](const XyzParams& p, double tau) { return propagator_analytic(p, tau).u; },
      py::arg("params"), py::arg("tau"));
  m.def("abs_delta", &abs_delta_analytic, py::arg("params"), py::arg("tau"), py::arg("epsilon"));

  m.def(
      "joint_probabilities",
      [](const Mat2& rho, double eps, const XyzParams& p, double tau) {
        return joint_probabilities(Rho2(rho), AssistantState{eps}, propagator_analytic(p, tau))
            .as_array();
      },
      py::arg("rho"), py::arg("epsilon"), py::arg("params"), py::arg("tau"));

  py::class_<TransferMatrix>(m, "TransferMatrix")
      .def_readonly("m", &TransferMatrix::m)
      .def_readonly("m_tilde", &TransferMatrix::mTilde)
      .def_readonly("delta", &TransferMatrix::delta)
      .def_readonly("abs_delta", &TransferMatrix::absDelta);
  m.def(
      "transfer_matrix",
      [](const XyzParams& p, double tau, double eps) {
        return transfer_matrix(AssistantState{eps}, propagator_analytic(p, tau));
      },
      py::arg("params"), py::arg("tau"), py::arg("epsilon"));

  py::class_<Reconstruction>(m, "Reconstruction")
      .def_readonly("s", &Reconstruction::s)
      .def_readonly("non_physical", &Reconstruction::nonPhysical)
      .def_readonly("imag_residual", &Reconstruction::imagResidual);
  m.def(
      "reconstruct",
      [](const std::array<double, 4>& probs, const TransferMatrix& tm) {
        return reconstruct(probs_from(probs), tm);
      },
      py::arg("probs"), py::arg("transfer"));

  py::class_<ErrorCoefficients>(m, "ErrorCoefficients")
      .def_readonly("ex", &ErrorCoefficients::ex)
      .def_readonly("ey", &ErrorCoefficients::ey)
      .def_readonly("ez", &ErrorCoefficients::ez)
      .def_readonly("e", &ErrorCoefficients::e);
  m.def("error_coefficients", &error_coefficients, py::arg("transfer"));

  m.def(
      "disordered_optimum",
      [](const std::string& model) { return disordered_optimum_params(parse_disordered_model(model)); },
      py::arg("model"), "Parameters and tau for 'xyx', 'xxz', 'xz+' or 'xz-'.");
  m.def(
      "pure_optimum",
      [](double tau, int mIndex, std::array<int, 6> signs, bool plusFirst) {
        PureOptimumSpec s;
        if (!plusFirst) std::swap(s.gamma1, s.gamma2);
        s.m = mIndex;
        s.signs = signs;
        return pure_optimum_params(s, tau);
      },
      py::arg("tau") = 1.0, py::arg("m") = 0, py::arg("signs") = std::array<int, 6>{1, 1, 1, 1, 1, 1},
      py::arg("plus_first") = true);
  m.def("pure_optimum_value", &pure_optimum_value);
  m.def("disordered_optimum_value", &disordered_optimum_value);

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("params", &OptimizationResult::params)
      .def_readonly("tau", &OptimizationResult::tau)
      .def_readonly("epsilon", &OptimizationResult::epsilon)
      .def_readonly("abs_delta", &OptimizationResult::absDelta)
      .def_readonly("evaluations", &OptimizationResult::evaluations)
      .def_readonly("converged", &OptimizationResult::converged);
  m.def("maximize_delta", &maximize_delta, py::arg("epsilon"), py::arg("tau") = std::nullopt,
        py::arg("seed") = 0, py::arg("budget") = 200000, py::call_guard<py::gil_scoped_release>());

  m.def(
      "failure_check",
      [](const XyzParams& p, double tau, double eps) {
        const FailureReport r = failure_check(p, tau, eps);
        return py::make_tuple(r.predicates, r.isSingular);
      },
      py::arg("params"), py::arg("tau"), py::arg("epsilon"));

  m.def("trotter_unitary", &trotter_unitary, py::arg("params"), py::arg("tau"), py::arg("m"));
  m.def(
      "gate_fidelity",
      [](const Mat4& u, const Mat4& v) {
        const GateFidelity f = gate_fidelity(u, v);
        return py::make_tuple(f.raw, f.magnitude, f.magnitudeSquared);
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "compile_trotter_sequence",
      [](const XyzParams& p, double tau, int segments, double j12) {
        return compile(trotter_sequence(p, tau, segments, j12), CompileMode::StrictUnitary).unitary();
      },
      py::arg("params"), py::arg("tau"), py::arg("m"), py::arg("j12") = kDefaultJ12Hz);
  m.def(
      "compile_exact_decomposition",
      [](const XyzParams& p, double tau, double omega1, double omega2, double j12) {
        const NmrParams nmr{omega1, omega2, j12};
        return compile(exact_decomposition_sequence(p, tau, nmr), CompileMode::StrictUnitary).unitary();
      },
      py::arg("params"), py::arg("tau"), py::arg("omega1") = 0.0, py::arg("omega2") = 0.0,
      py::arg("j12") = kDefaultJ12Hz);
  m.def(
      "pulse_dump",
      [](const XyzParams& p, double tau, const std::string& method, double j12) {
        const Method mt = Method::parse(method);
        if (mt.kind == Method::Kind::Trotter) return dump(trotter_sequence(p, tau, mt.segments, j12));
        if (mt.kind == Method::Kind::ExactDecomposition) {
          return dump(exact_decomposition_sequence(p, tau, NmrParams{0.0, 0.0, j12}));
        }
        throw std::invalid_argument("pulse_dump needs trotter:<m> or exact");
      },
      py::arg("params"), py::arg("tau"), py::arg("method"), py::arg("j12") = kDefaultJ12Hz);

  m.def(
      "run_tomography",
      [](const XyzParams& p, double tau, double eps, std::array<double, 3> state,
         const std::string& method, const std::string& noise, std::uint64_t seed) {
        TomographyConfig c;
        c.params = p;
        c.tau = tau;
        c.epsilon = eps;
        c.method = Method::parse(method);
        c.noise = NoiseSpec::parse(noise, seed);
        const SweepRecord r = run_tomography(BlochState{state[0], state[1], state[2]}, c);
        py::dict out;
        out["s_in"] = r.sIn;
        out["s_out"] = r.sOut;
        out["fidelity"] = r.fidelity;
        out["distance"] = r.distance;
        out["non_physical"] = r.nonPhysical;
        return out;
      },
      py::arg("params"), py::arg("tau"), py::arg("epsilon"), py::arg("state"),
      py::arg("method") = "analytic", py::arg("noise") = "none", py::arg("seed") = 0,
      "state is (r, theta, phi).");

  m.def(
      "concurrence", [](const Mat4& rho) { return concurrence(Rho4(rho)); }, py::arg("rho"));
  m.def(
      "delta_error_curve",
      [](const XyzParams& p, double eps, double tauMax, int steps) {
        const auto pts = delta_error_curve(p, eps, tau_grid(tauMax, steps));
        Eigen::MatrixXd out(static_cast<Eigen::Index>(pts.size()), 8);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          const auto r = static_cast<Eigen::Index>(i);
          out(r, 0) = pts[i].tau;
          out(r, 1) = pts[i].absDelta;
          out(r, 2) = pts[i].errorCoeff;
          out(r, 3) = pts[i].product;
          for (int k = 0; k < 4; ++k) out(r, 4 + k) = pts[i].concurrence[k];
        }
        return out;
      },
      py::arg("params"), py::arg("epsilon"), py::arg("tau_max") = 2 * std::numbers::pi,
      py::arg("steps") = 500,
      "Columns: tau, |Delta|, E, E*|Delta|, concurrence of the four tracked states.");
}
