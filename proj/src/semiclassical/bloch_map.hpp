#pragma once

// Thermodynamic-limit stroboscopic map of the two regional Bloch vectors.
// One drive period is a rigid z-rotation of both vectors by 2J(l1z + l2z)
// followed by independent x-rotations by 2*pi*h1 and 2*pi*h2. Rotations are
// right-handed, matching exp(-i phi n.S) on the quantum side.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "window.hpp"

namespace lmgdtc::semiclassical {

using Vec3 = Eigen::Vector3d;

struct BlochPair {
  Vec3 l1{0.0, 0.0, 1.0};
  Vec3 l2{0.0, 0.0, 1.0};

  Vec3 total() const { return 0.5 * (l1 + l2); }
};

struct DriveParams {
  double j_coupling = 0.5;
  double h1 = 0.0;
  double h2 = 0.0;
  double delta = 1e-4;
};

/// Polar/azimuthal angles of each region's initial orientation.
struct InitialAngles {
  double theta1 = 0.0;
  double phi1 = 0.0;
  double theta2 = 0.0;
  double phi2 = 0.0;
};

Vec3 unit_vector(double theta, double phi);
BlochPair bloch_from_angles(const InitialAngles& angles);

Vec3 rotate_z(const Vec3& v, double angle);
Vec3 rotate_x(const Vec3& v, double angle);

BlochPair interaction_kick(const BlochPair& state, double j_coupling);
BlochPair drive_kick(const BlochPair& state, double h1, double h2);
BlochPair stroboscopic_step(const BlochPair& state, const DriveParams& params);
/// Exact inverse of stroboscopic_step.
BlochPair inverse_step(const BlochPair& state, const DriveParams& params);

/// States at cycles 0..n_cycles (n_cycles + 1 entries).
std::vector<BlochPair> run_trajectory(const BlochPair& init, const DriveParams& params,
                                      std::size_t n_cycles);

enum class Perturbation {
  Drive,         // companion uses h_r + delta on both regions
  InitialState,  // companion starts rotated by delta about x, same drives
};

struct DecorrelatorSeries {
  std::vector<double> total;    // on (l1 + l2) / 2
  std::vector<double> region1;  // on l1
  std::vector<double> region2;  // on l2
};

/// sqrt(1/2 * |a - b|^2).
double decorrelator_distance(const Vec3& a, const Vec3& b);

DecorrelatorSeries decorrelator_between(const BlochPair& init_a, const DriveParams& params_a,
                                        const BlochPair& init_b, const DriveParams& params_b,
                                        std::size_t n_cycles);

DecorrelatorSeries decorrelator_series(const BlochPair& init, const DriveParams& params,
                                       std::size_t n_cycles,
                                       Perturbation mode = Perturbation::Drive);

/// Mean of the total decorrelator over the inclusive window; the trajectory
/// is run up to window.last.
double time_averaged_decorrelator(const BlochPair& init, const DriveParams& params,
                                  CycleWindow window, Perturbation mode = Perturbation::Drive);

}  // namespace lmgdtc::semiclassical
