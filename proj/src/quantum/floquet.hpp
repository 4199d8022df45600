#pragma once

// Exact finite-N stroboscopic evolution restricted to the maximal collective
// sector j = N/4 of each region. States live on the (2j+1)^2 product basis
// and the Floquet operator is kept factored: diagonal interaction phases,
// then exp(-i 2 pi h1 Sx1), then exp(-i 2 pi h2 Sx2).

#include <cstddef>
#include <vector>

#include "semiclassical/bloch_map.hpp"
#include "spin/collective_spin.hpp"
#include "window.hpp"

namespace lmgdtc::quantum {

using spin::Complex;
using semiclassical::InitialAngles;

struct QuantumModel {
  int n_spins = 100;
  double j_coupling = 0.5;
  double h1 = 0.0;
  double h2 = 0.0;

  /// Validates n_spins (even, >= 2) and finiteness of the couplings.
  static QuantumModel make(int n_spins, double j_coupling, double h1, double h2);

  spin::SpinMagnitude j_region() const { return spin::region_spin(n_spins); }
  int region_dim() const { return j_region().dim(); }
  std::size_t dim() const {
    const auto d = static_cast<std::size_t>(region_dim());
    return d * d;
  }
};

/// Amplitudes over the product basis, index = k1 * d2 + k2 where k_r = j - m_r.
struct StateVector {
  int d1 = 0;
  int d2 = 0;
  std::vector<Complex> amplitudes;

  double norm() const;
  Complex& at(int k1, int k2) { return amplitudes[static_cast<std::size_t>(k1) * d2 + k2]; }
  const Complex& at(int k1, int k2) const {
    return amplitudes[static_cast<std::size_t>(k1) * d2 + k2];
  }
};

struct FloquetFactors {
  spin::DiagonalPhases phases;
  spin::UnitaryMatrix r1;
  spin::UnitaryMatrix r2;
};

/// Normalized stroboscopic observables; L_a^(r) = <S_a^(r)> / j.
struct Expectations {
  double lz1 = 0.0;
  double lz2 = 0.0;
  double lz = 0.0;
  double lx1 = 0.0;
  double lx2 = 0.0;
  double ly1 = 0.0;
  double ly2 = 0.0;
};

StateVector init_polarized(const QuantumModel& model);
/// Product of spin-coherent states exp(-i phi Sz) exp(-i theta Sy) |j,j>.
StateVector init_coherent(const QuantumModel& model, const InitialAngles& angles);

FloquetFactors build_floquet_factors(const QuantumModel& model);

/// In-place one-period evolution; O(d^(3/2)) via the tensor structure.
void apply_floquet(StateVector& state, const FloquetFactors& factors);
/// Exact inverse using conjugated phases and adjoint rotations.
void apply_inverse_floquet(StateVector& state, const FloquetFactors& factors);

Expectations expectations(const StateVector& state, const QuantumModel& model);

/// <S_r . S_r> for region r in {1, 2}; stays j(j+1) inside the sector.
double region_casimir(const StateVector& state, const QuantumModel& model, int region);

std::vector<Expectations> run_quantum_trajectory(const QuantumModel& model, std::size_t n_cycles,
                                                 const InitialAngles& init = {});

/// F(n) = 1 - |<psi0| U^-n W U^n |psi0>|^2 with W = exp(i eps (Sz1 + Sz2)),
/// n = 0..n_cycles. Uses <psi_n|W|psi_n> on the forward state only, so the
/// whole series costs n_cycles propagator applications.
std::vector<double> fotoc_series(const QuantumModel& model, double epsilon, std::size_t n_cycles,
                                 const InitialAngles& init = {});

/// Single FOTOC value by the literal echo: forward n steps, W, backward n
/// steps, overlap with psi0. O(n) per value; used as a cross-check.
double fotoc_echo(const QuantumModel& model, const FloquetFactors& factors, double epsilon,
                  std::size_t n, const InitialAngles& init = {});

double time_averaged_fotoc(const QuantumModel& model, double epsilon, CycleWindow window,
                           const InitialAngles& init = {});

}  // namespace lmgdtc::quantum
