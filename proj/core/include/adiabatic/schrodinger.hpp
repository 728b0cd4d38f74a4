#pragma once

// Ground state of the slow oscillator on the lower adiabatic potential:
//   [-1/2 d^2/dQ^2 + U_l(Q)/omega] phi0 = (E0/omega) phi0

#include <cstddef>
#include <vector>

#include "adiabatic/model.hpp"

namespace adiabatic {

/// Uniform grid over [q_min, q_max] including both endpoints.
struct Grid {
  double q_min = -1.0;
  double q_max = 1.0;
  std::size_t n_points = 3;

  static Grid symmetric(double q_max, std::size_t n_points);

  /// Throws InvalidArgument unless n_points >= 3 and q_min < q_max.
  void validate() const;

  [[nodiscard]] double spacing() const noexcept {
    return (q_max - q_min) / static_cast<double>(n_points - 1);
  }

  /// Q_i. Computed about the grid centre so that symmetric grids give
  /// point(n-1-i) == -point(i) exactly.
  [[nodiscard]] double point(std::size_t i) const noexcept;

  [[nodiscard]] bool is_symmetric() const noexcept;
};

struct GroundSolution {
  double energy = 0.0;               // E0 / omega
  std::vector<double> wavefunction;  // phi0(Q_i) >= 0, sum phi0^2 h = 1
  Grid grid;
};

inline constexpr std::size_t kDefaultGridPoints = 2001;

/// Symmetric grid sized from the well geometry:
///   alpha > 1:  q_max = Q0 + 8/sqrt(k'),   k' = 1 - 1/(D alpha^2)
///   otherwise:  q_max = 8/sqrt(max(1 - alpha, 0.05))
/// k' is floored at 0.05 as well, which only matters for D alpha^2 < 1.05.
/// Throws InvalidArgument when D <= 0.
[[nodiscard]] Grid auto_grid(const DimensionlessParams& dp,
                             std::size_t n_points = kDefaultGridPoints);

/// Three-point finite differences with Dirichlet boundaries: diagonal
/// 1/h^2 + U_l(Q_i)/omega, off-diagonal -1/(2h^2). Returns the lowest
/// eigenpair with the eigenvector sign-fixed positive and normalized so that
/// sum_i phi0_i^2 h = 1.
///
/// When W = 0 on a symmetric grid the problem is reduced to the even-parity
/// sector, which holds the ground state; this keeps the result exactly
/// symmetric even when the tunnelling splitting is below machine precision.
[[nodiscard]] GroundSolution solve_ground(const DimensionlessParams& dp,
                                          const Grid& grid);

/// auto_grid + solve_ground. If |phi0| at either endpoint is not below
/// 1e-6, q_max is doubled and the solve repeated, at most three times;
/// ConvergenceError afterwards.
[[nodiscard]] GroundSolution solve_ground_auto(
    const DimensionlessParams& dp, std::size_t n_points = kDefaultGridPoints);

inline constexpr double kBoundaryTolerance = 1e-6;

/// True when |phi0| at both endpoints is below kBoundaryTolerance.
[[nodiscard]] bool boundary_is_small(const GroundSolution& sol);

/// Probability mass (trapezoidal) on Q < 0 and Q > 0. A grid point sitting
/// exactly at Q = 0 contributes half of its weight to each side.
struct HalfLineMass {
  double negative = 0.0;
  double positive = 0.0;
};
[[nodiscard]] HalfLineMass half_line_mass(const GroundSolution& sol);

/// Trapezoidal weights for the grid (h/2 at both ends, h inside).
[[nodiscard]] std::vector<double> trapezoid_weights(const Grid& grid);

}  // namespace adiabatic
