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

#include "soqst/pulsesim.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace soqst {

namespace {

constexpr double kPi = std::numbers::pi;

// Total Sz quantum number of each basis state, times 2.
constexpr int kMagnetization[4] = {1, 0, 0, -1};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// R block for angles (t1, t2): the first pulse pair turns the coupling into
// the right effective interaction, the delays accumulate the rotation angles.
PulseSequence r_block(double t1, double t2, const NmrParams& nmr) {
  const double j = nmr.j12Hz;
  const double tau1 = std::abs(t1 - t2) / (2.0 * kPi * j);
  // The zz evolution is periodic up to a global phase with period 2 / J12, so
  // negative times wrap around.
  const double tau2 = std::fmod(std::fmod((t1 + t2) / (2.0 * kPi * j), 2.0 / j) + 2.0 / j, 2.0 / j);
  const Axis phi = (t1 >= t2) ? Axis::x() : Axis::minus_x();
  const double h = kPi / 2.0;
  PulseSequence s;
  s.nmr = nmr;
  s.rotate(Target::Qubit1, Axis::minus_y(), h).rotate(Target::Qubit2, phi, h);
  s.delay(tau1 / 2.0);
  s.rotate(Target::Qubit1, Axis::y(), kPi).rotate(Target::Qubit2, Axis::minus_x(), kPi);
  s.delay(tau1 / 2.0);
  s.rotate(Target::Qubit1, Axis::minus_x(), h).rotate(Target::Qubit2, Axis::y(), h);
  s.delay(tau2 / 2.0);
  s.rotate(Target::Qubit1, Axis::x(), kPi).rotate(Target::Qubit2, Axis::minus_y(), kPi);
  s.delay(tau2 / 2.0);
  s.rotate(Target::Qubit1, Axis::minus_x(), h).rotate(Target::Qubit1, Axis::minus_y(), h);
  s.rotate(Target::Qubit2, Axis::y(), h).rotate(Target::Qubit2, phi, h);
  return s;
}

}  // namespace

void NmrParams::validate() const {
  if (!std::isfinite(omega1) || !std::isfinite(omega2) || !std::isfinite(j12Hz)) {
    throw std::invalid_argument("NmrParams: non-finite field");
  }
}

Mat4 NmrParams::hamiltonian() const {
  return omega1 * on_qubit1(spin::z()) + omega2 * on_qubit2(spin::z()) +
         2.0 * kPi * j12Hz * kron(spin::z(), spin::z());
}

Axis Axis::y() { return {Kind::Transverse, kPi / 2.0}; }
Axis Axis::minus_x() { return {Kind::Transverse, kPi}; }
Axis Axis::minus_y() { return {Kind::Transverse, 3.0 * kPi / 2.0}; }

Mat2 Axis::spin_operator() const {
  switch (kind) {
    case Kind::PlusZ: return spin::z();
    case Kind::MinusZ: return -spin::z();
    case Kind::Transverse: break;
  }
  return std::cos(azimuth) * spin::x() + std::sin(azimuth) * spin::y();
}

std::string Axis::name() const {
  if (kind == Kind::PlusZ) return "z";
  if (kind == Kind::MinusZ) return "-z";
  const char* names[4] = {"x", "y", "-x", "-y"};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(std::remainder(azimuth - k * kPi / 2.0, 2.0 * kPi)) < 1e-12) return names[k];
  }
  return "phi=" + fmt(azimuth);
}

PulseSequence& PulseSequence::rotate(Target target, Axis axis, double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  events.emplace_back(Rotation{target, axis, angle});
  return *this;
}

PulseSequence& PulseSequence::delay(double seconds) {
  if (!(seconds >= 0.0) || !std::isfinite(seconds)) {
    throw std::invalid_argument("delay must be finite and non-negative");
  }
  events.emplace_back(Delay{seconds});
  return *this;
}

PulseSequence& PulseSequence::gradient() {
  events.emplace_back(Gradient{});
  return *this;
}

PulseSequence& PulseSequence::append(const PulseSequence& other) {
  events.insert(events.end(), other.events.begin(), other.events.end());
  return *this;
}

Mat4 gradient_dephase(const Mat4& rho) {
  Mat4 out = rho;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (kMagnetization[i] != kMagnetization[j]) out(i, j) = 0.0;
    }
  }
  return out;
}

Rho4 gradient_dephase(const Rho4& rho) { return Rho4(gradient_dephase(rho.matrix())); }

QuantumChannel::QuantumChannel(const Mat4& u) { stages_.front().u = u; }

void QuantumChannel::then_unitary(const Mat4& u) {
  Stage& last = stages_.back();
  last.u = u * last.u;
}

void QuantumChannel::then_dephase() {
  stages_.back().dephase = true;
  stages_.push_back(Stage{});
}

bool QuantumChannel::is_unitary() const { return stages_.size() == 1; }

const Mat4& QuantumChannel::unitary() const {
  if (!is_unitary()) throw ModeError("channel contains gradient dephasing and is not unitary");
  return stages_.front().u;
}

Mat4 QuantumChannel::apply(const Mat4& rho) const {
  Mat4 r = rho;
  for (const Stage& s : stages_) {
    r = s.u * r * s.u.adjoint();
    if (s.dephase) r = gradient_dephase(r);
  }
  return r;
}

Rho4 QuantumChannel::apply(const Rho4& rho) const {
  const Mat4 r = apply(rho.matrix());
  return Rho4(0.5 * (r + r.adjoint()));
}

Mat4 rotation_unitary(const Rotation& r) {
  const Mat2 s = r.axis.spin_operator();
  // (2 S)^2 = 1 for any unit axis.
  const Mat2 single = std::cos(0.5 * r.angle) * Mat2::Identity() -
                      cplx(0.0, 2.0 * std::sin(0.5 * r.angle)) * s;
  switch (r.target) {
    case Target::Qubit1: return on_qubit1(single);
    case Target::Qubit2: return on_qubit2(single);
    case Target::Both: return kron(single, single);
  }
  return Mat4::Identity();
}

Mat4 delay_unitary(const NmrParams& nmr, double seconds) {
  nmr.validate();
  const Mat4 h = nmr.hamiltonian();
  Mat4 u = Mat4::Zero();
  for (int k = 0; k < 4; ++k) u(k, k) = std::exp(cplx(0.0, -h(k, k).real() * seconds));
  return u;
}

QuantumChannel compile(const PulseSequence& seq, CompileMode mode) {
  QuantumChannel ch;
  for (const PulseEvent& e : seq.events) {
    std::visit(Overloaded{
                   [&](const Rotation& r) { ch.then_unitary(rotation_unitary(r)); },
                   [&](const Delay& d) { ch.then_unitary(delay_unitary(seq.nmr, d.duration)); },
                   [&](const Gradient&) {
                     if (mode == CompileMode::StrictUnitary) {
                       throw ModeError("gradient in a sequence compiled as strictly unitary");
                     }
                     ch.then_dephase();
                   },
               },
               e);
  }
  return ch;
}

Mat4 trotter_segment(const XyzParams& p, double dt) {
  const XyzParams zPart{p.b1, p.b2, 0.0, 0.0, p.jz};
  const XyzParams xyPart{0.0, 0.0, p.jx, p.jy, 0.0};
  const Mat4 uz = propagator_analytic(zPart, 0.5 * dt).u;
  const Mat4 uxy = propagator_analytic(xyPart, dt).u;
  return uz * uxy * uz;
}

Mat4 trotter_unitary(const XyzParams& p, double tau, int m) {
  if (m < 1) throw std::invalid_argument("trotter_unitary: m must be >= 1");
  const Mat4 seg = trotter_segment(p, tau / m);
  Mat4 u = Mat4::Identity();
  for (int k = 0; k < m; ++k) u = seg * u;
  return u;
}

PulseSequence trotter_sequence(const XyzParams& p, double tau, int m, double j12Hz) {
  p.validate();
  if (m < 1) throw std::invalid_argument("trotter_sequence: m must be >= 1");
  if (!(j12Hz > 0.0) || !std::isfinite(j12Hz)) {
    throw std::invalid_argument("trotter_sequence: J12 must be positive");
  }
  if (p.jy != 0.0 || !(p.jx * tau > 0.0) || !(p.jz * tau > 0.0)) {
    throw UnsupportedModel(
        "trotter_sequence supports only jy = 0 with jx tau > 0 and jz tau > 0");
  }
  const double dt = tau / m;
  const double twoPiJ = 2.0 * kPi * j12Hz;
  const double d1 = p.jz * dt / (2.0 * twoPiJ);
  const double d2 = p.jx * dt / twoPiJ;

  PulseSequence s;
  s.nmr = {twoPiJ * p.b1 / p.jz, twoPiJ * p.b2 / p.jz, j12Hz};
  for (int k = 0; k < m; ++k) {
    s.delay(d1);
    s.rotate(Target::Both, Axis::y(), kPi / 2.0);
    s.delay(d2 / 2.0);
    s.rotate(Target::Both, Axis::minus_y(), kPi);
    s.delay(d2 / 2.0);
    s.rotate(Target::Both, Axis::y(), kPi / 2.0);
    s.delay(d1);
  }
  return s;
}

ExactDecompositionTiming exact_decomposition_timing(const XyzParams& p, double tau,
                                                    double j12Hz) {
  if (!(j12Hz > 0.0) || !std::isfinite(j12Hz)) {
    throw std::invalid_argument("exact decomposition: J12 must be positive");
  }
  if (!std::isfinite(tau)) throw std::invalid_argument("exact decomposition: non-finite tau");
  const DerivedParams d = derive(p);
  const Spectrum s = spectrum(p);
  const auto& l = s.lambdas;
  const double twoPiJ = 2.0 * kPi * j12Hz;
  const double period = 2.0 / j12Hz;
  auto wrap = [period](double t) { return std::fmod(std::fmod(t, period) + period, period); };

  ExactDecompositionTiming t;
  t.tau1 = std::abs(d.theta1 - d.theta2) / twoPiJ;
  t.tau2 = wrap((d.theta1 + d.theta2) / twoPiJ);
  t.tau3 = wrap((l[0] - l[1] - l[2] + l[3]) * tau / twoPiJ);
  t.beta1 = (l[0] + l[1] - l[2] - l[3]) * tau / 2.0;
  t.beta2 = (l[0] - l[1] + l[2] - l[3]) * tau / 2.0;
  t.phiPlusX = d.theta1 >= d.theta2;
  return t;
}

PulseSequence exact_decomposition_sequence(const XyzParams& p, double tau, const NmrParams& nmr) {
  nmr.validate();
  const ExactDecompositionTiming t = exact_decomposition_timing(p, tau, nmr.j12Hz);
  const DerivedParams d = derive(p);
  const double h = kPi / 2.0;

  PulseSequence s;
  s.nmr = nmr;
  // Delays cannot run backwards, so R^dagger is the R block for negated angles.
  s.append(r_block(-d.theta1, -d.theta2, nmr));

  s.delay(t.tau3 / 2.0);
  s.rotate(Target::Both, Axis::x(), kPi);
  s.delay(t.tau3 / 2.0);
  s.rotate(Target::Both, Axis::minus_x(), h);
  // With exp(-i theta S) rotations, [pi/2]_-x [beta]_-y [pi/2]_-x is exp(-i beta Sz).
  s.rotate(Target::Qubit1, Axis::minus_y(), t.beta1);
  s.rotate(Target::Qubit2, Axis::minus_y(), t.beta2);
  s.rotate(Target::Both, Axis::minus_x(), h);

  s.append(r_block(d.theta1, d.theta2, nmr));
  return s;
}

GateFidelity gate_fidelity(const Mat4& u, const Mat4& v) {
  if (!u.allFinite() || !v.allFinite() || unitarity_error(u) > 1e-8 || unitarity_error(v) > 1e-8) {
    throw std::invalid_argument("gate_fidelity: inputs must be unitary");
  }
  GateFidelity f;
  f.raw = (u.adjoint() * v).trace() / 4.0;
  f.magnitude = std::abs(f.raw);
  f.magnitudeSquared = f.magnitude * f.magnitude;
  return f;
}

std::string dump(const PulseSequence& seq) {
  std::ostringstream out;
  for (const PulseEvent& e : seq.events) {
    std::visit(Overloaded{
                   [&](const Rotation& r) {
                     const char* q = r.target == Target::Qubit1   ? "1"
                                     : r.target == Target::Qubit2 ? "2"
                                                                  : "both";
                     out << "rot q=" << q << " axis=" << r.axis.name()
                         << " angle=" << fmt(r.angle) << '\n';
                   },
                   [&](const Delay& d) { out << "delay t=" << fmt(d.duration) << '\n'; },
                   [&](const Gradient&) { out << "grad\n"; },
               },
               e);
  }
  return out.str();
}

}  // namespace soqst
