#pragma once

// Closed-form limits of the ground-state Bloch vector and tangle.
//
// The small- and large-alpha expansions are diagnostics; the Schrodinger
// solver is the authoritative route at finite D.

#include <vector>

#include "adiabatic/model.hpp"
#include "adiabatic/observables.hpp"

namespace adiabatic {

/// -1 + alpha/(2 D k), k = sqrt(1 - alpha). Requires W = 0 and 0 <= alpha < 1.
[[nodiscard]] double bx_small_alpha(const DimensionlessParams& dp);

/// -1/alpha - 2/(D alpha^2). Requires W = 0 and alpha > 1.
[[nodiscard]] double bx_large_alpha(const DimensionlessParams& dp);

/// Massive-limit tangle: 0 for alpha <= 1, 1 - 1/alpha^2 above.
/// Throws InvalidArgument for negative alpha.
[[nodiscard]] double massive_tangle(double alpha);

/// Stationary points of the massive-limit potential
///   V(q) = m omega^2 q^2 / 2 - sqrt(delta^2 + (epsilon + lambda q)^2),
/// i.e. solutions of q = (lambda/(m omega^2)) (epsilon + lambda q)/Delta(q).
struct SaddleSet {
  std::vector<double> roots;  // ascending
  double global_min = 0.0;    // root with the lowest V
  /// Two roots share the lowest V (epsilon = 0, alpha > 1). global_min is
  /// then the positive one; the negative one is in `roots` as well.
  bool degenerate = false;
};

/// Roots of the stationarity condition by a sign-change scan on
/// |q| <= 1.05 lambda/(m omega^2) + margin (every root lies within
/// lambda/(m omega^2)), refined by bisection. Each root satisfies the fixed
/// point relation to 1e-10. Throws InvalidArgument when delta <= 0.
[[nodiscard]] SaddleSet saddle_points(const ModelParams& p);

/// Massive potential V(q) and its derivative.
[[nodiscard]] double massive_potential(const ModelParams& p, double q);
[[nodiscard]] double massive_potential_slope(const ModelParams& p, double q);

enum class WellSelection { Unique, Positive, Negative };

/// b_x = -delta/Delta(q_m), b_z = -(epsilon + lambda q_m)/Delta(q_m).
///
/// For a degenerate pair of minima (epsilon = 0, alpha > 1) the zero
/// temperature state is an equal mixture, not either well; choosing one is
/// left to the caller via `selection`. WellSelection::Unique on a
/// degenerate set throws DegenerateGroundState.
[[nodiscard]] QubitState massive_bloch(
    const ModelParams& p, WellSelection selection = WellSelection::Unique);

/// Equal mixture of the degenerate minima: b_x = -delta/Delta(q_m), b_z = 0.
/// Coincides with massive_bloch when the minimum is unique and epsilon = 0.
[[nodiscard]] QubitState massive_bloch_symmetric_mixture(const ModelParams& p);

}  // namespace adiabatic
