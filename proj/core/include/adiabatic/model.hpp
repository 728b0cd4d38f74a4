#pragma once

// Parameterization of the qubit + slow oscillator model and the closed-form
// quantities of the adiabatic (Born-Oppenheimer) decomposition.
//
// Physical Hamiltonian (hbar = 1):
//   H = delta*sx + [epsilon + lambda/sqrt(2 m omega) (a^+ + a)] sz + omega a^+ a
// Dimensionless form with Q = (a^+ + a)/sqrt(2), P = i(a^+ - a)/sqrt(2):
//   H = (omega/2) [Q^2 + P^2 + D sx + (W + L Q) sz]
// where D = 2 delta/omega, W = 2 epsilon/omega, L = 2 lambda/sqrt(m omega^3).

#include <array>
#include <vector>

namespace adiabatic {

/// Physical parameters. Energies share one unit; hbar = 1.
struct ModelParams {
  double delta = 0.0;    // qubit transition frequency
  double epsilon = 0.0;  // level asymmetry
  double omega = 1.0;    // oscillator frequency
  double lambda = 0.0;   // coupling strength
  double mass = 1.0;     // oscillator mass

  /// Throws InvalidArgument unless omega > 0, mass > 0, delta >= 0 and
  /// lambda >= 0.
  void validate() const;

  /// lambda -> |lambda|. H is invariant under (lambda, q) -> (-lambda, -q),
  /// so every qubit observable is unchanged; oscillator wavefunctions come
  /// out mirrored through q = 0.
  [[nodiscard]] ModelParams with_nonnegative_coupling() const;

  /// alpha = lambda^2 / (m omega^2 delta). Throws when delta == 0.
  [[nodiscard]] double alpha() const;
};

/// Dimensionless parameters (D, W, L). alpha is derived, never stored.
class DimensionlessParams {
 public:
  DimensionlessParams() = default;
  /// Throws InvalidArgument if big_d < 0 or big_l < 0 (or any is non-finite).
  DimensionlessParams(double big_d, double big_w, double big_l);

  /// Convenience constructor used by the figures: L = sqrt(2 D alpha).
  /// Rejects D <= 0 and alpha < 0.
  static DimensionlessParams from_alpha(double big_d, double big_w,
                                        double alpha);

  [[nodiscard]] double big_d() const noexcept { return big_d_; }
  [[nodiscard]] double big_w() const noexcept { return big_w_; }
  [[nodiscard]] double big_l() const noexcept { return big_l_; }

  /// alpha = L^2 / (2D). Throws InvalidArgument when D == 0.
  [[nodiscard]] double alpha() const;

  /// W + L q, the sigma_z field seen by the qubit at oscillator position q.
  [[nodiscard]] double bias(double q) const noexcept {
    return big_w_ + big_l_ * q;
  }

 private:
  double big_d_ = 0.0;
  double big_w_ = 0.0;
  double big_l_ = 0.0;
};

enum class AdiabaticBranch { Lower, Upper };

/// Amplitudes A+(Q), A-(Q) of the adiabatic qubit eigenstates. Both are
/// non-negative, which fixes the global phase.
struct QubitAmplitudes {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// Throws InvalidArgument on omega <= 0, mass <= 0, delta < 0.
/// Negative lambda is folded to |lambda| (see ModelParams).
[[nodiscard]] DimensionlessParams to_dimensionless(const ModelParams& p);

/// Inverse of to_dimensionless for given oscillator scales.
[[nodiscard]] ModelParams to_physical(const DimensionlessParams& dp,
                                      double omega, double mass);

/// E(Q) = sqrt(D^2 + (W + L Q)^2).
[[nodiscard]] double adiabatic_gap(const DimensionlessParams& dp, double q);

/// Amplitudes of the qubit eigenstates of D sx + (W + L Q) sz.
/// Lower state: (A- |+> - A+ |->)/sqrt(2), eigenvalue -E(Q).
/// Upper state: (A+ |+> + A- |->)/sqrt(2), eigenvalue +E(Q).
/// The branch does not change the amplitudes, only how they are combined;
/// it is accepted to mirror the state-vector API. Throws DegeneratePoint
/// when E(Q) == 0.
[[nodiscard]] QubitAmplitudes qubit_eigenstate(const DimensionlessParams& dp,
                                               double q,
                                               AdiabaticBranch branch);

/// Components <+|chi>, <-|chi> of the branch eigenstate at Q.
[[nodiscard]] std::array<double, 2> qubit_state_vector(
    const DimensionlessParams& dp, double q, AdiabaticBranch branch);

/// U(Q)/omega = (Q^2 -/+ E(Q))/2, Lower takes -E.
[[nodiscard]] double adiabatic_potential(const DimensionlessParams& dp,
                                         double q, AdiabaticBranch branch);

/// dU_l/dQ and d^2U_l/dQ^2 in units of omega.
[[nodiscard]] double lower_potential_slope(const DimensionlessParams& dp,
                                           double q);
[[nodiscard]] double lower_potential_curvature(const DimensionlessParams& dp,
                                               double q);

struct WellMinimum {
  double q_min = 0.0;
  double u_min = 0.0;  // U_l(q_min)/omega
};

/// Position of the symmetric W = 0 double-well minima, Q0 = (D/L) sqrt(alpha^2 - 1).
/// Returns 0 for alpha <= 1. Throws if D <= 0.
[[nodiscard]] double symmetric_well_offset(const DimensionlessParams& dp);

/// Local minima of U_l sorted by depth (deepest first).
///
/// W = 0 uses the closed forms: a single minimum (0, -D/2) for alpha <= 1,
/// otherwise the pair +-Q0 at depth -(D/4)(alpha + 1/alpha), listed with the
/// negative one first. For W != 0 stationary points are bracketed by sign
/// changes of dU_l/dQ on a 0.01-step scan and refined by bisection.
///
/// With the sign conventions of this model a positive W deepens the well at
/// positive Q: U_l(Q) - U_l(-Q) = -(E(Q) - E(-Q))/2 < 0 for W Q > 0.
///
/// Throws InvalidArgument when D <= 0.
[[nodiscard]] std::vector<WellMinimum> well_minima(const DimensionlessParams& dp);

}  // namespace adiabatic
