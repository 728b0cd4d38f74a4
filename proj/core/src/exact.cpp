#include "adiabatic/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <Eigen/Eigenvalues>

#include "adiabatic/errors.hpp"

namespace adiabatic {

void FockTruncation::validate() const {
  if (n_boson < 2) throw InvalidArgument("n_boson must be at least 2");
}

FockTruncation default_truncation(const DimensionlessParams& dp) {
  const double l = dp.big_l();
  const auto n = static_cast<std::size_t>(std::ceil(l * l + 10.0 * l));
  return {std::max<std::size_t>(100, n)};
}

Eigen::MatrixXd build_hamiltonian(const DimensionlessParams& dp,
                                  const FockTruncation& tr) {
  tr.validate();
  const auto dim = static_cast<Eigen::Index>(tr.dimension());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double half_d = 0.5 * dp.big_d();
  const double half_w = 0.5 * dp.big_w();
  const double coupling = 0.5 * dp.big_l() / std::sqrt(2.0);
  for (std::size_t n = 0; n < tr.n_boson; ++n) {
    const auto p = static_cast<Eigen::Index>(2 * n);
    const auto m = p + 1;
    const double occupation = static_cast<double>(n);
    h(p, p) = occupation + half_w;
    h(m, m) = occupation - half_w;
    h(p, m) = h(m, p) = half_d;
    if (n + 1 < tr.n_boson) {
      const double g = coupling * std::sqrt(occupation + 1.0);
      h(p, p + 2) = h(p + 2, p) = g;
      h(m, m + 2) = h(m + 2, m) = -g;
    }
  }
  return h;
}

ExactGround ground_state_exact(const DimensionlessParams& dp,
                               const FockTruncation& tr) {
  const Eigen::MatrixXd h = build_hamiltonian(dp, tr);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense eigensolver failed for n_boson = " +
                           std::to_string(tr.n_boson));
  }
  ExactGround g;
  g.truncation = tr;
  g.energy = solver.eigenvalues()(0);
  g.gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
  g.amplitudes = solver.eigenvectors().col(0);
  Eigen::Index peak = 0;
  g.amplitudes.cwiseAbs().maxCoeff(&peak);
  if (g.amplitudes(peak) < 0.0) g.amplitudes = -g.amplitudes;
  g.amplitudes.normalize();
  return g;
}

QubitState exact_qubit_state(const ExactGround& g) {
  double bx = 0.0;
  double bz = 0.0;
  for (std::size_t n = 0; n < g.truncation.n_boson; ++n) {
    const double cp = g.plus(n);
    const double cm = g.minus(n);
    bx += 2.0 * cp * cm;
    bz += cp * cp - cm * cm;
  }
  return {bx, bz};
}

namespace {

std::string shift_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

ConvergedExact converged_ground_state(const DimensionlessParams& dp,
                                      std::optional<FockTruncation> tr) {
  const FockTruncation base = tr.value_or(default_truncation(dp));
  base.validate();
  const FockTruncation larger{base.n_boson + (base.n_boson + 1) / 2};
  ConvergedExact out;
  out.ground = ground_state_exact(dp, base);
  const ExactGround bigger = ground_state_exact(dp, larger);
  out.energy_shift = std::abs(bigger.energy - out.ground.energy);
  if (!(out.energy_shift < kTruncationShiftTolerance)) {
    throw ConvergenceError("Fock truncation n_boson = " +
                           std::to_string(base.n_boson) +
                           " not adequate: E0 moves by " +
                           shift_text(out.energy_shift));
  }
  return out;
}

}  // namespace adiabatic
