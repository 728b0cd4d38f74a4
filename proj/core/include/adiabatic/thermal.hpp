#pragma once

// Thermal state of the massive-limit model (oscillator kinetic energy
// dropped). Integrands are evaluated relative to their largest exponent, so
// beta * Delta(q) well beyond the double exponent range is fine.

#include <span>

#include "adiabatic/model.hpp"
#include "adiabatic/observables.hpp"

namespace adiabatic {

struct ThermalParams {
  double beta = 1.0;  // inverse temperature
  ModelParams model;

  /// Throws InvalidArgument unless beta > 0 and the model is valid.
  void validate() const;
};

/// ln Z(beta), Z = 2 int dq exp(-beta m omega^2 q^2/2) cosh(beta Delta(q)).
/// Quadrature relative error target 1e-10.
[[nodiscard]] double log_partition_function(const ThermalParams& tp);

/// Z(beta) itself. Throws ConvergenceError if Z overflows a double; use
/// log_partition_function in that regime.
[[nodiscard]] double partition_function(const ThermalParams& tp);

/// Thermal Bloch vector:
///   b_x = -(2/Z) int dq (delta/Delta(q)) e^{-beta m omega^2 q^2/2} sinh(beta Delta(q))
///   b_z = -(2/Z) int dq ((epsilon + lambda q)/Delta(q)) e^{...} sinh(beta Delta(q))
[[nodiscard]] QubitState thermal_bloch(const ThermalParams& tp);

struct ZeroTemperatureEstimate {
  QubitState state;
  double fit_residual = 0.0;  // max |fit - data| over both components
};

/// Richardson-style extrapolation of thermal_bloch to beta -> infinity: a
/// least-squares polynomial in 1/beta of degree min(2, n - 2), so at least
/// one degree of freedom remains to report a residual.
///
/// Betas must be positive, strictly increasing and at least three. For
/// epsilon = 0 and alpha > 1 the ground state is degenerate and the limit of
/// b_z is ill-posed; that case throws DegenerateGroundState.
[[nodiscard]] ZeroTemperatureEstimate zero_temperature_extrapolation(
    const ModelParams& p, std::span<const double> betas);

}  // namespace adiabatic
