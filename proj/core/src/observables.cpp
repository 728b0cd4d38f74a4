#include "adiabatic/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {

namespace {

constexpr double kClampTolerance = 1e-12;

double gaussian(double k, double q, double centre) {
  const double x = q - centre;
  return std::pow(k / std::numbers::pi, 0.25) * std::exp(-0.5 * k * x * x);
}

}  // namespace

QubitState::QubitState(double b_x, double b_z) : b_x_(b_x), b_z_(b_z) {
  if (!std::isfinite(b_x) || !std::isfinite(b_z)) {
    throw InvalidArgument("Bloch components must be finite");
  }
  if (b_x * b_x + b_z * b_z > 1.0 + kNormTolerance) {
    throw InvalidArgument("Bloch vector longer than 1: |b|^2 = " +
                          std::to_string(b_x * b_x + b_z * b_z));
  }
}

double QubitState::norm() const noexcept { return std::hypot(b_x_, b_z_); }

QubitState bloch_vector(const DimensionlessParams& dp,
                        const GroundSolution& sol) {
  const auto w = trapezoid_weights(sol.grid);
  double bx = 0.0;
  double bz = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double q = sol.grid.point(i);
    const double e = adiabatic_gap(dp, q);
    if (e == 0.0) {
      throw DegeneratePoint("E(Q) vanishes on the grid at Q = " +
                            std::to_string(q));
    }
    const double p = w[i] * sol.wavefunction[i] * sol.wavefunction[i];
    bx -= p * dp.big_d() / e;
    bz -= p * dp.bias(q) / e;
  }
  return {bx, bz};
}

Tangle tangle(const QubitState& state) {
  double t = 1.0 - state.b_x() * state.b_x() - state.b_z() * state.b_z();
  if (t < 0.0) {
    if (t < -kClampTolerance) {
      throw InvalidArgument("tangle below 0 beyond rounding: " +
                            std::to_string(t));
    }
    t = 0.0;
  } else if (t > 1.0) {
    if (t > 1.0 + kClampTolerance) {
      throw InvalidArgument("tangle above 1 beyond rounding");
    }
    t = 1.0;
  }
  return {t};
}

DensityMatrix reduced_density(const QubitState& state) {
  DensityMatrix rho;
  rho << 0.5 * (1.0 + state.b_z()), 0.5 * state.b_x(),
         0.5 * state.b_x(), 0.5 * (1.0 - state.b_z());
  return rho;
}

double purity(const DensityMatrix& rho) { return (rho * rho).trace(); }

double tangle_from_density(const DensityMatrix& rho) {
  return 2.0 * (1.0 - purity(rho));
}

std::vector<double> cat_ansatz(const DimensionlessParams& dp,
                               const Grid& grid) {
  if (dp.big_w() != 0.0) throw InvalidArgument("cat ansatz requires W = 0");
  const double a = dp.alpha();
  if (!(a > 1.0)) throw InvalidArgument("cat ansatz requires alpha > 1");
  const double k_prime = 1.0 - 1.0 / (dp.big_d() * a * a);
  if (!(k_prime > 0.0)) {
    throw InvalidArgument("cat ansatz width 1 - 1/(D alpha^2) is not positive");
  }
  const double q0 = symmetric_well_offset(dp);
  std::vector<double> psi(grid.n_points);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double q = grid.point(i);
    psi[i] = gaussian(k_prime, q, q0) + gaussian(k_prime, q, -q0);
    norm2 += psi[i] * psi[i];
  }
  const double scale = 1.0 / std::sqrt(norm2 * grid.spacing());
  for (double& x : psi) x *= scale;
  return psi;
}

double cat_fidelity(const DimensionlessParams& dp, const GroundSolution& sol) {
  const auto psi = cat_ansatz(dp, sol.grid);
  const auto w = trapezoid_weights(sol.grid);
  double overlap = 0.0;
  double n_phi = 0.0;
  double n_psi = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double phi = sol.wavefunction[i];
    overlap += w[i] * phi * psi[i];
    n_phi += w[i] * phi * phi;
    n_psi += w[i] * psi[i] * psi[i];
  }
  return overlap * overlap / (n_phi * n_psi);
}

}  // namespace adiabatic
