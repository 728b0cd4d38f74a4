#pragma once

// Exact diagonalization of the full qubit + oscillator Hamiltonian in a
// truncated Fock basis. Independent of the adiabatic decomposition; used to
// validate it.
//
//   H/omega = a^+ a + (D/2) sx + ((W + L Q)/2) sz,   Q = (a^+ + a)/sqrt(2)
//
// Basis ordering is interleaved: index 2n + s with s = 0 for |n,+> and s = 1
// for |n,->, so the matrix is pentadiagonal. Note that the zero-point term
// omega/2 of (Q^2 + P^2)/2 is not included: add 0.5 to compare with the
// adiabatic E0.

#include <cstddef>
#include <optional>

#include <Eigen/Core>

#include "adiabatic/model.hpp"
#include "adiabatic/observables.hpp"

namespace adiabatic {

struct FockTruncation {
  std::size_t n_boson = 100;  // basis states per qubit level (max occupancy + 1)

  /// Throws InvalidArgument if n_boson < 2.
  void validate() const;
  [[nodiscard]] std::size_t dimension() const noexcept { return 2 * n_boson; }
};

struct ExactGround {
  double energy = 0.0;          // E0/omega without the zero-point 1/2
  double gap = 0.0;             // E1 - E0
  Eigen::VectorXd amplitudes;   // c_{n,s} at index 2n + s, unit norm
  FockTruncation truncation;

  [[nodiscard]] double plus(std::size_t n) const { return amplitudes(static_cast<Eigen::Index>(2 * n)); }
  [[nodiscard]] double minus(std::size_t n) const { return amplitudes(static_cast<Eigen::Index>(2 * n + 1)); }
};

/// max(100, ceil(L^2 + 10 L)): the displaced vacuum at +-Q0 has mean
/// occupancy Q0^2/2 <= L^2/8, so this leaves a wide margin.
[[nodiscard]] FockTruncation default_truncation(const DimensionlessParams& dp);

[[nodiscard]] Eigen::MatrixXd build_hamiltonian(const DimensionlessParams& dp,
                                                const FockTruncation& tr);

/// Lowest eigenpair; the largest-magnitude amplitude is made positive.
[[nodiscard]] ExactGround ground_state_exact(const DimensionlessParams& dp,
                                             const FockTruncation& tr);

/// b_x = 2 sum_n c_{n,+} c_{n,-}, b_z = sum_n (c_{n,+}^2 - c_{n,-}^2).
[[nodiscard]] QubitState exact_qubit_state(const ExactGround& g);

inline constexpr double kTruncationShiftTolerance = 1e-8;

struct ConvergedExact {
  ExactGround ground;        // at the accepted truncation
  double energy_shift = 0.0; // |E0(1.5 n) - E0(n)|
};

/// Ground state at `tr` (default_truncation when empty), accepted only if
/// enlarging n_boson by 50% moves E0 by less than 1e-8. ConvergenceError
/// otherwise.
[[nodiscard]] ConvergedExact converged_ground_state(
    const DimensionlessParams& dp, std::optional<FockTruncation> tr = {});

}  // namespace adiabatic
