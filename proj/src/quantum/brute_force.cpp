#include "quantum/brute_force.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace lmgdtc::quantum {

namespace {

std::uint32_t region_mask(int n, int region) {
  const int half = n / 2;
  const std::uint32_t low = (std::uint32_t{1} << half) - 1;
  return region == 1 ? low : (low << half);
}

double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace

PauliSpaceSimulator::PauliSpaceSimulator(int n_spins, double j_coupling, double h1, double h2)
    : n_(n_spins), j_(j_coupling), h1_(h1), h2_(h2) {
  if (n_spins > kBruteForceMaxSpins) {
    fail(ErrorCode::OutOfRange, "brute-force reference limited to N <= 12, got " +
                                    std::to_string(n_spins));
  }
  if (n_spins < 2 || n_spins % 2 != 0) {
    fail(ErrorCode::InvalidArgument, "number of spins must be even and >= 2");
  }
  psi_.assign(std::size_t{1} << n_, Complex{});
  psi_[0] = 1.0;
}

int PauliSpaceSimulator::sigma_z_total(std::uint32_t bits) const {
  return n_ - 2 * std::popcount(bits);
}

Complex PauliSpaceSimulator::interaction_half_phase(std::uint32_t bits) const {
  // H1 / 2 = (J / N) (sum_i sigma_i^z)^2 on a computational basis state.
  const double z = sigma_z_total(bits);
  return std::polar(1.0, -(j_ / n_) * z * z);
}

void PauliSpaceSimulator::apply_interaction_half() {
  for (std::uint32_t b = 0; b < psi_.size(); ++b) psi_[b] *= interaction_half_phase(b);
}

void PauliSpaceSimulator::apply_drive_half() {
  // exp(-i pi h sigma^x) = cos(pi h) - i sin(pi h) sigma^x on each site.
  for (int site = 0; site < n_; ++site) {
    const double h = site < n_ / 2 ? h1_ : h2_;
    const double c = std::cos(std::numbers::pi * h);
    const Complex mis(0.0, -std::sin(std::numbers::pi * h));
    const std::uint32_t flip = std::uint32_t{1} << site;
    for (std::uint32_t b = 0; b < psi_.size(); ++b) {
      if (b & flip) continue;
      const Complex up = psi_[b];
      const Complex down = psi_[b | flip];
      psi_[b] = c * up + mis * down;
      psi_[b | flip] = mis * up + c * down;
    }
  }
}

void PauliSpaceSimulator::step() {
  apply_interaction_half();
  apply_drive_half();
}

void PauliSpaceSimulator::apply_collective_z_phase(double epsilon) {
  for (std::uint32_t b = 0; b < psi_.size(); ++b)
    psi_[b] *= std::polar(1.0, 0.5 * epsilon * sigma_z_total(b));
}

Expectations PauliSpaceSimulator::expectations() const {
  double sz[2] = {0.0, 0.0};
  double sx[2] = {0.0, 0.0};
  double sy[2] = {0.0, 0.0};
  for (int site = 0; site < n_; ++site) {
    const int r = site < n_ / 2 ? 0 : 1;
    const std::uint32_t flip = std::uint32_t{1} << site;
    for (std::uint32_t b = 0; b < psi_.size(); ++b) {
      if (b & flip) continue;
      const Complex up = psi_[b];
      const Complex down = psi_[b | flip];
      sz[r] += std::norm(up) - std::norm(down);
      // <sigma^x> = 2 Re(conj(down) up), <sigma^y> = -2 Im(conj(down) up)
      const Complex cross = std::conj(down) * up;
      sx[r] += 2.0 * cross.real();
      sy[r] -= 2.0 * cross.imag();
    }
  }
  const double inv = 2.0 / n_;
  Expectations e;
  e.lz1 = sz[0] * inv;
  e.lz2 = sz[1] * inv;
  e.lz = 0.5 * (e.lz1 + e.lz2);
  e.lx1 = sx[0] * inv;
  e.lx2 = sx[1] * inv;
  e.ly1 = sy[0] * inv;
  e.ly2 = sy[1] * inv;
  return e;
}

std::vector<Expectations> brute_force_reference(int n_spins, double j_coupling, double h1,
                                                double h2, std::size_t n_cycles) {
  PauliSpaceSimulator sim(n_spins, j_coupling, h1, h2);
  std::vector<Expectations> out;
  out.reserve(n_cycles + 1);
  out.push_back(sim.expectations());
  for (std::size_t n = 0; n < n_cycles; ++n) {
    sim.step();
    out.push_back(sim.expectations());
  }
  return out;
}

std::vector<double> brute_force_fotoc(int n_spins, double j_coupling, double h1, double h2,
                                      double epsilon, std::size_t n_cycles) {
  const PauliSpaceSimulator start(n_spins, j_coupling, h1, h2);
  // Backward evolution uses the negated Hamiltonians in reverse order.
  std::vector<double> out;
  for (std::size_t n = 0; n <= n_cycles; ++n) {
    PauliSpaceSimulator fwd = start;
    for (std::size_t k = 0; k < n; ++k) fwd.step();
    fwd.apply_collective_z_phase(epsilon);
    PauliSpaceSimulator back(n_spins, -j_coupling, -h1, -h2);
    back.state() = fwd.state();
    for (std::size_t k = 0; k < n; ++k) {
      back.apply_drive_half();
      back.apply_interaction_half();
    }
    const Complex overlap = back.state()[0];  // psi0 is the all-up basis state
    out.push_back(1.0 - std::norm(overlap));
  }
  return out;
}

std::vector<Complex> embed_in_pauli_space(const StateVector& state, int n_spins) {
  if (n_spins > kBruteForceMaxSpins) fail(ErrorCode::OutOfRange, "embedding limited to N <= 12");
  const int half = n_spins / 2;
  if (state.d1 != half + 1 || state.d2 != half + 1) {
    fail(ErrorCode::Mismatch, "state does not match the number of spins");
  }
  std::vector<Complex> out(std::size_t{1} << n_spins);
  const std::uint32_t m1 = region_mask(n_spins, 1);
  const std::uint32_t m2 = region_mask(n_spins, 2);
  for (std::uint32_t b = 0; b < out.size(); ++b) {
    const int k1 = std::popcount(b & m1);  // number of down spins = j - m
    const int k2 = std::popcount(b & m2);
    out[b] = state.at(k1, k2) / std::sqrt(binomial(half, k1) * binomial(half, k2));
  }
  return out;
}

}  // namespace lmgdtc::quantum
