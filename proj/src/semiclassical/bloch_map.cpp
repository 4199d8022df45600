#include "semiclassical/bloch_map.hpp"

#include <cmath>
#include <numbers>

namespace lmgdtc::semiclassical {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Vec3 unit_vector(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochPair bloch_from_angles(const InitialAngles& a) {
  return {unit_vector(a.theta1, a.phi1), unit_vector(a.theta2, a.phi2)};
}

Vec3 rotate_z(const Vec3& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x() - s * v.y(), s * v.x() + c * v.y(), v.z()};
}

Vec3 rotate_x(const Vec3& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {v.x(), c * v.y() - s * v.z(), s * v.y() + c * v.z()};
}

BlochPair interaction_kick(const BlochPair& state, double j_coupling) {
  const double angle = 2.0 * j_coupling * (state.l1.z() + state.l2.z());
  return {rotate_z(state.l1, angle), rotate_z(state.l2, angle)};
}

BlochPair drive_kick(const BlochPair& state, double h1, double h2) {
  return {rotate_x(state.l1, kTwoPi * h1), rotate_x(state.l2, kTwoPi * h2)};
}

BlochPair stroboscopic_step(const BlochPair& state, const DriveParams& p) {
  return drive_kick(interaction_kick(state, p.j_coupling), p.h1, p.h2);
}

BlochPair inverse_step(const BlochPair& state, const DriveParams& p) {
  // l1z + l2z is invariant under the z-kick, so negating J inverts it.
  return interaction_kick(drive_kick(state, -p.h1, -p.h2), -p.j_coupling);
}

std::vector<BlochPair> run_trajectory(const BlochPair& init, const DriveParams& params,
                                      std::size_t n_cycles) {
  std::vector<BlochPair> out;
  out.reserve(n_cycles + 1);
  out.push_back(init);
  for (std::size_t n = 0; n < n_cycles; ++n) out.push_back(stroboscopic_step(out.back(), params));
  return out;
}

double decorrelator_distance(const Vec3& a, const Vec3& b) {
  return std::sqrt(0.5 * (a - b).squaredNorm());
}

DecorrelatorSeries decorrelator_between(const BlochPair& init_a, const DriveParams& params_a,
                                        const BlochPair& init_b, const DriveParams& params_b,
                                        std::size_t n_cycles) {
  DecorrelatorSeries out;
  out.total.reserve(n_cycles + 1);
  out.region1.reserve(n_cycles + 1);
  out.region2.reserve(n_cycles + 1);
  BlochPair a = init_a;
  BlochPair b = init_b;
  for (std::size_t n = 0;; ++n) {
    out.total.push_back(decorrelator_distance(a.total(), b.total()));
    out.region1.push_back(decorrelator_distance(a.l1, b.l1));
    out.region2.push_back(decorrelator_distance(a.l2, b.l2));
    if (n == n_cycles) break;
    a = stroboscopic_step(a, params_a);
    b = stroboscopic_step(b, params_b);
  }
  return out;
}

DecorrelatorSeries decorrelator_series(const BlochPair& init, const DriveParams& params,
                                       std::size_t n_cycles, Perturbation mode) {
  if (mode == Perturbation::Drive) {
    DriveParams perturbed = params;
    perturbed.h1 += params.delta;
    perturbed.h2 += params.delta;
    return decorrelator_between(init, params, init, perturbed, n_cycles);
  }
  const BlochPair shifted{rotate_x(init.l1, params.delta), rotate_x(init.l2, params.delta)};
  return decorrelator_between(init, params, shifted, params, n_cycles);
}

double time_averaged_decorrelator(const BlochPair& init, const DriveParams& params,
                                  CycleWindow window, Perturbation mode) {
  const auto series = decorrelator_series(init, params, window.last, mode);
  return window_mean(series.total, window);
}

}  // namespace lmgdtc::semiclassical
