#include "spin/collective_spin.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace lmgdtc::spin {

SpinMagnitude SpinMagnitude::from_value(double j) {
  const double twice = 2.0 * j;
  const double rounded = std::round(twice);
  if (!std::isfinite(j) || rounded < 1.0 || std::abs(twice - rounded) > 1e-9) {
    fail(ErrorCode::InvalidArgument,
         "spin magnitude must be a positive integer or half-integer, got " + std::to_string(j));
  }
  return SpinMagnitude(static_cast<int>(rounded));
}

SpinMagnitude SpinMagnitude::from_twice(int twice_j) {
  if (twice_j < 1) {
    fail(ErrorCode::InvalidArgument, "2j must be positive, got " + std::to_string(twice_j));
  }
  return SpinMagnitude(twice_j);
}

std::vector<double> raising_coefficients(SpinMagnitude j) {
  const int d = j.dim();
  const double jj = j.value();
  std::vector<double> c(d, 0.0);
  for (int k = 1; k < d; ++k) {
    const double m = j.m_at(k);
    c[k] = std::sqrt(jj * (jj + 1.0) - m * (m + 1.0));
  }
  return c;
}

SpinMatrices build_spin_matrices(SpinMagnitude j) {
  const int d = j.dim();
  const auto c = raising_coefficients(j);

  Eigen::MatrixXd splus = Eigen::MatrixXd::Zero(d, d);
  for (int k = 1; k < d; ++k) splus(k - 1, k) = c[k];

  SpinMatrices out{j, ComplexMatrix(d, d), ComplexMatrix(d, d), ComplexMatrix::Zero(d, d)};
  const Eigen::MatrixXd sminus = splus.transpose();
  out.sx = (0.5 * (splus + sminus)).cast<Complex>();
  out.sy = (Complex(0.0, -0.5) * (splus - sminus).cast<Complex>());
  for (int k = 0; k < d; ++k) out.sz(k, k) = j.m_at(k);
  return out;
}

XRotationGenerator::XRotationGenerator(SpinMagnitude j) : j_(j) {
  const int d = j.dim();
  const auto c = raising_coefficients(j);
  Eigen::MatrixXd sx = Eigen::MatrixXd::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    sx(k - 1, k) = 0.5 * c[k];
    sx(k, k - 1) = 0.5 * c[k];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sx);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::InvalidArgument, "Sx diagonalization failed for 2j=" + std::to_string(j.twice()));
  }
  eigvecs_ = solver.eigenvectors();
  eigvals_ = solver.eigenvalues();
  // The spectrum of Sx is exactly {-j, ..., j}; snap the ascending
  // eigenvalues so long pulse trains do not accumulate eigenvalue error.
  for (int k = 0; k < d; ++k) {
    const double exact = -j.value() + k;
    if (std::abs(eigvals_(k) - exact) > 1e-8) {
      fail(ErrorCode::InvalidArgument, "unexpected Sx eigenvalue");
    }
    eigvals_(k) = exact;
  }
}

UnitaryMatrix XRotationGenerator::operator()(double phi) const {
  if (!std::isfinite(phi)) fail(ErrorCode::InvalidArgument, "rotation angle must be finite");
  const int d = j_.dim();
  Eigen::VectorXcd phases(d);
  for (int k = 0; k < d; ++k) phases(k) = std::polar(1.0, -phi * eigvals_(k));
  const ComplexMatrix v = eigvecs_.cast<Complex>();
  return UnitaryMatrix{v * phases.asDiagonal() * v.adjoint()};
}

UnitaryMatrix x_rotation(SpinMagnitude j, double phi) {
  return XRotationGenerator(j)(phi);
}

SpinMagnitude region_spin(int n_spins) {
  if (n_spins < 2 || n_spins % 2 != 0) {
    fail(ErrorCode::InvalidArgument,
         "number of spins must be even and >= 2, got " + std::to_string(n_spins));
  }
  // j = (N/2) * 1/2, so 2j = N/2.
  return SpinMagnitude::from_twice(n_spins / 2);
}

DiagonalPhases interaction_half_phases(int n_spins, double j_coupling) {
  const SpinMagnitude j = region_spin(n_spins);
  const int d = j.dim();
  const double scale = 4.0 * j_coupling / n_spins;
  DiagonalPhases out{d, d, std::vector<Complex>(static_cast<size_t>(d) * d)};
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // m1 + m2 = 2j - a - b is an integer for every product state.
      const double total = j.twice() - a - b;
      out.values[static_cast<size_t>(a) * d + b] = std::polar(1.0, -scale * total * total);
    }
  }
  return out;
}

}  // namespace lmgdtc::spin
