#pragma once

// Collective spin-j operators in the |j,m> basis ordered m = j, j-1, ..., -j,
// and the two building blocks of the factored Floquet propagator: regional
// x-rotations and the diagonal interaction phases on the product basis
// |j1,m1> (x) |j2,m2> (m1 outer, m2 inner).

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace lmgdtc::spin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Spin magnitude stored as the integer 2j, so half-integers are exact.
class SpinMagnitude {
public:
  /// Throws InvalidArgument unless 2j is a positive integer.
  static SpinMagnitude from_value(double j);
  static SpinMagnitude from_twice(int twice_j);

  int twice() const noexcept { return twice_; }
  double value() const noexcept { return 0.5 * twice_; }
  int dim() const noexcept { return twice_ + 1; }
  /// Magnetic quantum number of basis index k (k = 0 is m = j).
  double m_at(int k) const noexcept { return value() - k; }

  friend bool operator==(SpinMagnitude, SpinMagnitude) = default;

private:
  explicit SpinMagnitude(int twice) : twice_(twice) {}
  int twice_;
};

struct SpinMatrices {
  SpinMagnitude j;
  ComplexMatrix sx, sy, sz;
  int dim() const noexcept { return j.dim(); }
};

struct UnitaryMatrix {
  ComplexMatrix entries;
  int dim() const noexcept { return static_cast<int>(entries.rows()); }
};

/// Unit-modulus phases on the product basis, row-major in (m1, m2).
struct DiagonalPhases {
  int d1 = 0;
  int d2 = 0;
  std::vector<Complex> values;
};

SpinMatrices build_spin_matrices(SpinMagnitude j);
inline SpinMatrices build_spin_matrices(double j) {
  return build_spin_matrices(SpinMagnitude::from_value(j));
}

/// <m+1| S+ |m> for each basis index k >= 1, i.e. coefficient linking index k
/// to index k-1. Entry 0 is unused and set to zero.
std::vector<double> raising_coefficients(SpinMagnitude j);

/// exp(-i phi Sx) for one spin magnitude. Sx is diagonalized once at
/// construction; each call only exponentiates eigenvalues.
class XRotationGenerator {
public:
  explicit XRotationGenerator(SpinMagnitude j);
  UnitaryMatrix operator()(double phi) const;
  SpinMagnitude spin() const noexcept { return j_; }

private:
  SpinMagnitude j_;
  Eigen::MatrixXd eigvecs_;
  Eigen::VectorXd eigvals_;
};

UnitaryMatrix x_rotation(SpinMagnitude j, double phi);

/// Spin magnitude of one region (N/2 spins-1/2 in the symmetric sector).
SpinMagnitude region_spin(int n_spins);

/// exp(-i (4J/N) (m1+m2)^2): half-period action of the all-to-all
/// interaction (2J/N)(sum sigma^z)^2 with unit drive period.
DiagonalPhases interaction_half_phases(int n_spins, double j_coupling);

}  // namespace lmgdtc::spin
