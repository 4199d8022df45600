#include "quantum/floquet.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace lmgdtc::quantum {

namespace {

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<RowMatrix> as_matrix(StateVector& s) {
  return {s.amplitudes.data(), s.d1, s.d2};
}

void check_dims(const StateVector& s, const FloquetFactors& f) {
  if (s.d1 != f.r1.dim() || s.d2 != f.r2.dim() || f.phases.d1 != s.d1 || f.phases.d2 != s.d2 ||
      s.amplitudes.size() != static_cast<std::size_t>(s.d1) * s.d2) {
    fail(ErrorCode::Mismatch, "state dimension does not match Floquet factors");
  }
}

std::vector<Complex> coherent_amplitudes(spin::SpinMagnitude j, double theta, double phi) {
  const int d = j.dim();
  const int n = j.twice();
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  std::vector<Complex> out(d);
  double norm2 = 0.0;
  for (int k = 0; k < d; ++k) {
    const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    const double mag = std::exp(0.5 * log_binom) * std::pow(c, n - k) * std::pow(s, k);
    out[k] = std::polar(1.0, -j.m_at(k) * phi) * mag;
    norm2 += mag * mag;
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : out) a *= inv;
  return out;
}

std::vector<Complex> fotoc_phases(const QuantumModel& model, double epsilon) {
  const auto j = model.j_region();
  const int d = j.dim();
  std::vector<Complex> w(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      w[static_cast<std::size_t>(a) * d + b] = std::polar(1.0, epsilon * (j.m_at(a) + j.m_at(b)));
  return w;
}

Complex weighted_overlap(const StateVector& s, const std::vector<Complex>& diag) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < diag.size(); ++k) acc += std::norm(s.amplitudes[k]) * diag[k];
  return acc;
}

}  // namespace

QuantumModel QuantumModel::make(int n_spins, double j_coupling, double h1, double h2) {
  spin::region_spin(n_spins);
  if (!std::isfinite(j_coupling) || !std::isfinite(h1) || !std::isfinite(h2)) {
    fail(ErrorCode::InvalidArgument, "model parameters must be finite");
  }
  return QuantumModel{n_spins, j_coupling, h1, h2};
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

StateVector init_polarized(const QuantumModel& model) {
  const int d = model.region_dim();
  StateVector s{d, d, std::vector<Complex>(model.dim(), Complex{})};
  s.at(0, 0) = 1.0;
  return s;
}

StateVector init_coherent(const QuantumModel& model, const InitialAngles& angles) {
  const auto j = model.j_region();
  const auto a = coherent_amplitudes(j, angles.theta1, angles.phi1);
  const auto b = coherent_amplitudes(j, angles.theta2, angles.phi2);
  const int d = j.dim();
  StateVector s{d, d, std::vector<Complex>(model.dim())};
  for (int k1 = 0; k1 < d; ++k1)
    for (int k2 = 0; k2 < d; ++k2) s.at(k1, k2) = a[k1] * b[k2];
  return s;
}

FloquetFactors build_floquet_factors(const QuantumModel& model) {
  const spin::XRotationGenerator rot(model.j_region());
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return FloquetFactors{spin::interaction_half_phases(model.n_spins, model.j_coupling),
                        rot(two_pi * model.h1), rot(two_pi * model.h2)};
}

void apply_floquet(StateVector& state, const FloquetFactors& f) {
  check_dims(state, f);
  for (std::size_t k = 0; k < state.amplitudes.size(); ++k) state.amplitudes[k] *= f.phases.values[k];
  auto psi = as_matrix(state);
  // Region 1 acts on the row index, region 2 on the column index.
  RowMatrix tmp;
  tmp.noalias() = f.r1.entries * psi;
  psi.noalias() = tmp * f.r2.entries.transpose();
}

void apply_inverse_floquet(StateVector& state, const FloquetFactors& f) {
  check_dims(state, f);
  auto psi = as_matrix(state);
  RowMatrix tmp;
  tmp.noalias() = f.r1.entries.adjoint() * psi;
  psi.noalias() = tmp * f.r2.entries.conjugate();
  for (std::size_t k = 0; k < state.amplitudes.size(); ++k)
    state.amplitudes[k] *= std::conj(f.phases.values[k]);
}

Expectations expectations(const StateVector& state, const QuantumModel& model) {
  const auto j = model.j_region();
  const int d = j.dim();
  if (state.d1 != d || state.d2 != d) fail(ErrorCode::Mismatch, "state does not match model");
  const auto c = spin::raising_coefficients(j);

  double z1 = 0.0, z2 = 0.0;
  Complex plus1 = 0.0, plus2 = 0.0;
  for (int k1 = 0; k1 < d; ++k1) {
    for (int k2 = 0; k2 < d; ++k2) {
      const Complex a = state.at(k1, k2);
      const double p = std::norm(a);
      z1 += p * j.m_at(k1);
      z2 += p * j.m_at(k2);
      if (k1 > 0) plus1 += c[k1] * std::conj(state.at(k1 - 1, k2)) * a;
      if (k2 > 0) plus2 += c[k2] * std::conj(state.at(k1, k2 - 1)) * a;
    }
  }
  const double inv = 1.0 / j.value();
  Expectations e;
  e.lz1 = z1 * inv;
  e.lz2 = z2 * inv;
  e.lz = 0.5 * (e.lz1 + e.lz2);
  e.lx1 = plus1.real() * inv;
  e.lx2 = plus2.real() * inv;
  e.ly1 = plus1.imag() * inv;
  e.ly2 = plus2.imag() * inv;
  return e;
}

double region_casimir(const StateVector& state, const QuantumModel& model, int region) {
  if (region != 1 && region != 2) fail(ErrorCode::InvalidArgument, "region must be 1 or 2");
  const auto ops = spin::build_spin_matrices(model.j_region());
  Eigen::Map<const RowMatrix> psi(state.amplitudes.data(), state.d1, state.d2);
  double acc = 0.0;
  for (const auto* op : {&ops.sx, &ops.sy, &ops.sz}) {
    const RowMatrix moved = region == 1 ? RowMatrix(*op * psi) : RowMatrix(psi * op->transpose());
    acc += moved.squaredNorm();
  }
  return acc;
}

std::vector<Expectations> run_quantum_trajectory(const QuantumModel& model, std::size_t n_cycles,
                                                 const InitialAngles& init) {
  const auto factors = build_floquet_factors(model);
  auto state = init_coherent(model, init);
  std::vector<Expectations> out;
  out.reserve(n_cycles + 1);
  out.push_back(expectations(state, model));
  for (std::size_t n = 0; n < n_cycles; ++n) {
    apply_floquet(state, factors);
    out.push_back(expectations(state, model));
  }
  return out;
}

std::vector<double> fotoc_series(const QuantumModel& model, double epsilon, std::size_t n_cycles,
                                 const InitialAngles& init) {
  if (!std::isfinite(epsilon)) fail(ErrorCode::InvalidArgument, "epsilon must be finite");
  const auto factors = build_floquet_factors(model);
  const auto w = fotoc_phases(model, epsilon);
  auto state = init_coherent(model, init);
  std::vector<double> out;
  out.reserve(n_cycles + 1);
  for (std::size_t n = 0;; ++n) {
    out.push_back(1.0 - std::norm(weighted_overlap(state, w)));
    if (n == n_cycles) break;
    apply_floquet(state, factors);
  }
  return out;
}

double fotoc_echo(const QuantumModel& model, const FloquetFactors& factors, double epsilon,
                  std::size_t n, const InitialAngles& init) {
  const auto w = fotoc_phases(model, epsilon);
  const auto psi0 = init_coherent(model, init);
  auto state = psi0;
  for (std::size_t k = 0; k < n; ++k) apply_floquet(state, factors);
  for (std::size_t k = 0; k < w.size(); ++k) state.amplitudes[k] *= w[k];
  for (std::size_t k = 0; k < n; ++k) apply_inverse_floquet(state, factors);
  Complex overlap = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k)
    overlap += std::conj(psi0.amplitudes[k]) * state.amplitudes[k];
  return 1.0 - std::norm(overlap);
}

double time_averaged_fotoc(const QuantumModel& model, double epsilon, CycleWindow window,
                           const InitialAngles& init) {
  const auto series = fotoc_series(model, epsilon, window.last, init);
  return window_mean(series, window);
}

}  // namespace lmgdtc::quantum
