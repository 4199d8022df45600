#pragma once

// Reference simulator on the full 2^N spin-1/2 Hilbert space, built directly
// from Pauli operators. Bit i of a basis index is 1 when spin i points down;
// spins 0 .. N/2-1 form region 1. Independent of the collective-sector code
// path and used only to check it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quantum/floquet.hpp"

namespace lmgdtc::quantum {

inline constexpr int kBruteForceMaxSpins = 12;

class PauliSpaceSimulator {
public:
  /// Starts in the all-up product state. Rejects n_spins > 12 or odd N.
  PauliSpaceSimulator(int n_spins, double j_coupling, double h1, double h2);

  int n_spins() const noexcept { return n_; }
  const std::vector<Complex>& state() const noexcept { return psi_; }
  std::vector<Complex>& state() noexcept { return psi_; }

  /// Diagonal entry of exp(-i H1 / 2) for one basis bitstring.
  Complex interaction_half_phase(std::uint32_t bits) const;
  void apply_interaction_half();
  /// exp(-i H2 / 2) as a product of commuting single-site x-rotations.
  void apply_drive_half();
  void step();

  /// Multiplies by exp(i eps sum_i sigma_i^z / 2) = exp(i eps (Sz1 + Sz2)).
  void apply_collective_z_phase(double epsilon);

  /// <sum sigma^a> over each region, divided by N/2.
  Expectations expectations() const;

private:
  int sigma_z_total(std::uint32_t bits) const;
  int n_;
  double j_;
  double h1_;
  double h2_;
  std::vector<Complex> psi_;
};

std::vector<Expectations> brute_force_reference(int n_spins, double j_coupling, double h1,
                                                double h2, std::size_t n_cycles);

/// 1 - |<psi0| U^-n W U^n |psi0>|^2 on the full space for n = 0..n_cycles,
/// with explicit forward, W, backward evolution for each n.
std::vector<double> brute_force_fotoc(int n_spins, double j_coupling, double h1, double h2,
                                      double epsilon, std::size_t n_cycles);

/// Maps a collective-sector state to the full space through symmetric
/// (Dicke) states of each region.
std::vector<Complex> embed_in_pauli_space(const StateVector& state, int n_spins);

}  // namespace lmgdtc::quantum
