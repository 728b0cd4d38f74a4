#pragma once

#include <Eigen/Core>

#include "adiabatic/model.hpp"
#include "adiabatic/schrodinger.hpp"

namespace adiabatic {

/// Bloch vector of the reduced qubit state. The Hamiltonian is real, so
/// b_y is pinned to zero; the constructor only takes (b_x, b_z).
class QubitState {
 public:
  static constexpr double kNormTolerance = 1e-10;

  QubitState() = default;
  /// Throws InvalidArgument if b_x^2 + b_z^2 > 1 + kNormTolerance or either
  /// component is not finite.
  QubitState(double b_x, double b_z);

  [[nodiscard]] double b_x() const noexcept { return b_x_; }
  [[nodiscard]] double b_y() const noexcept { return 0.0; }
  [[nodiscard]] double b_z() const noexcept { return b_z_; }
  [[nodiscard]] double norm() const noexcept;

 private:
  double b_x_ = 0.0;
  double b_z_ = 0.0;
};

struct Tangle {
  double value = 0.0;
};

using DensityMatrix = Eigen::Matrix2d;

/// b_x = -int phi0^2 D/E dQ, b_z = -int phi0^2 (W + L Q)/E dQ (trapezoidal).
/// Throws DegeneratePoint if E vanishes on a grid point.
[[nodiscard]] QubitState bloch_vector(const DimensionlessParams& dp,
                                      const GroundSolution& sol);

/// tau = 1 - b_x^2 - b_z^2. Values within 1e-12 outside [0, 1] are clamped;
/// larger violations throw InvalidArgument.
[[nodiscard]] Tangle tangle(const QubitState& state);

/// rho = (I + b_x sx + b_z sz)/2 in the sz basis {|+>, |->}.
[[nodiscard]] DensityMatrix reduced_density(const QubitState& state);

/// Tr rho^2.
[[nodiscard]] double purity(const DensityMatrix& rho);

/// 2 (1 - Tr rho^2), the tangle of a globally pure state.
[[nodiscard]] double tangle_from_density(const DensityMatrix& rho);

/// |<phi0 | (phi+ + phi-)/sqrt(2 + 2s)>|^2 with phi+- the Gaussians
/// (k'/pi)^{1/4} exp(-k'(Q -+ Q0)^2/2), k' = 1 - 1/(D alpha^2), s their
/// overlap. All integrals use the trapezoidal rule on the solution grid, and
/// the overlap is divided by both grid norms.
/// Requires alpha > 1 and W = 0 (InvalidArgument otherwise).
[[nodiscard]] double cat_fidelity(const DimensionlessParams& dp,
                                  const GroundSolution& sol);

/// The normalized symmetric two-Gaussian trial state sampled on `grid`
/// (normalized with the same sum phi^2 h = 1 rule as GroundSolution).
[[nodiscard]] std::vector<double> cat_ansatz(const DimensionlessParams& dp,
                                             const Grid& grid);

}  // namespace adiabatic
