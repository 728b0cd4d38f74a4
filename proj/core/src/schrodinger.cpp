#include "adiabatic/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "adiabatic/errors.hpp"
#include "adiabatic/tridiagonal.hpp"

namespace adiabatic {

namespace {

constexpr double kGridFloor = 0.05;
constexpr int kMaxGridRetries = 3;

double lower_u(const DimensionlessParams& dp, double q) {
  return adiabatic_potential(dp, q, AdiabaticBranch::Lower);
}

// Even-parity block of the symmetric-grid Hamiltonian in the orthonormal
// basis {(e_{c+j} + e_{c'-j}) / sqrt(2)}, mapped back to grid amplitudes.
std::vector<double> solve_even_sector(const DimensionlessParams& dp,
                                      const Grid& grid, double& energy) {
  const std::size_t n = grid.n_points;
  const double h = grid.spacing();
  const double kin_diag = 1.0 / (h * h);
  const double off = -0.5 / (h * h);

  SymmetricTridiagonal t;
  std::vector<double> phi(n);
  if (n % 2 == 1) {
    const std::size_t c = (n - 1) / 2;
    t.diagonal.resize(c + 1);
    t.off_diagonal.assign(c, off);
    for (std::size_t j = 0; j <= c; ++j) {
      t.diagonal[j] = kin_diag + lower_u(dp, grid.point(c + j));
    }
    t.off_diagonal[0] = std::sqrt(2.0) * off;
    const Eigenpair ev = smallest_eigenpair(t);
    energy = ev.value;
    phi[c] = ev.vector[0];
    for (std::size_t j = 1; j <= c; ++j) {
      phi[c + j] = phi[c - j] = ev.vector[j] / std::sqrt(2.0);
    }
  } else {
    const std::size_t c = n / 2;
    t.diagonal.resize(c);
    t.off_diagonal.assign(c - 1, off);
    for (std::size_t j = 0; j < c; ++j) {
      t.diagonal[j] = kin_diag + lower_u(dp, grid.point(c + j));
    }
    t.diagonal[0] += off;
    const Eigenpair ev = smallest_eigenpair(t);
    energy = ev.value;
    for (std::size_t j = 0; j < c; ++j) {
      phi[c + j] = phi[c - 1 - j] = ev.vector[j] / std::sqrt(2.0);
    }
  }
  return phi;
}

std::vector<double> solve_full(const DimensionlessParams& dp, const Grid& grid,
                               double& energy) {
  const std::size_t n = grid.n_points;
  const double h = grid.spacing();
  SymmetricTridiagonal t;
  t.diagonal.resize(n);
  t.off_diagonal.assign(n - 1, -0.5 / (h * h));
  for (std::size_t i = 0; i < n; ++i) {
    t.diagonal[i] = 1.0 / (h * h) + lower_u(dp, grid.point(i));
  }
  Eigenpair ev = smallest_eigenpair(t);
  energy = ev.value;
  return std::move(ev.vector);
}

}  // namespace

Grid Grid::symmetric(double q_max, std::size_t n_points) {
  Grid g{-q_max, q_max, n_points};
  g.validate();
  return g;
}

void Grid::validate() const {
  if (n_points < 3) throw InvalidArgument("grid needs at least 3 points");
  if (!std::isfinite(q_min) || !std::isfinite(q_max) || !(q_min < q_max)) {
    throw InvalidArgument("grid requires finite q_min < q_max");
  }
}

double Grid::point(std::size_t i) const noexcept {
  const double centre = 0.5 * (q_min + q_max);
  const double offset = 2.0 * static_cast<double>(i) -
                        static_cast<double>(n_points - 1);
  return centre + offset * (0.5 * spacing());
}

bool Grid::is_symmetric() const noexcept { return q_min == -q_max; }

Grid auto_grid(const DimensionlessParams& dp, std::size_t n_points) {
  if (!(dp.big_d() > 0.0)) throw InvalidArgument("auto_grid requires D > 0");
  const double a = dp.alpha();
  double q_max = 0.0;
  if (a > 1.0) {
    const double k_prime =
        std::max(1.0 - 1.0 / (dp.big_d() * a * a), kGridFloor);
    q_max = symmetric_well_offset(dp) + 8.0 / std::sqrt(k_prime);
  } else {
    q_max = 8.0 / std::sqrt(std::max(1.0 - a, kGridFloor));
  }
  return Grid::symmetric(q_max, n_points);
}

GroundSolution solve_ground(const DimensionlessParams& dp, const Grid& grid) {
  grid.validate();
  GroundSolution sol;
  sol.grid = grid;
  const bool even_sector = dp.big_w() == 0.0 && grid.is_symmetric();
  sol.wavefunction = even_sector ? solve_even_sector(dp, grid, sol.energy)
                                 : solve_full(dp, grid, sol.energy);

  auto& phi = sol.wavefunction;
  if (std::accumulate(phi.begin(), phi.end(), 0.0) < 0.0) {
    for (double& x : phi) x = -x;
  }
  const double peak = *std::max_element(phi.begin(), phi.end());
  for (double& x : phi) {
    if (x < 0.0) {
      // The lowest state of this stencil is node-free; anything beyond
      // rounding noise signals a broken solve.
      if (x < -1e-10 * peak) {
        throw ConvergenceError("ground state eigenvector changes sign");
      }
      x = 0.0;
    }
  }
  const double h = grid.spacing();
  const double norm = std::sqrt(
      h * std::inner_product(phi.begin(), phi.end(), phi.begin(), 0.0));
  for (double& x : phi) x /= norm;
  return sol;
}

bool boundary_is_small(const GroundSolution& sol) {
  return std::abs(sol.wavefunction.front()) < kBoundaryTolerance &&
         std::abs(sol.wavefunction.back()) < kBoundaryTolerance;
}

GroundSolution solve_ground_auto(const DimensionlessParams& dp,
                                 std::size_t n_points) {
  Grid grid = auto_grid(dp, n_points);
  for (int attempt = 0; attempt <= kMaxGridRetries; ++attempt) {
    GroundSolution sol = solve_ground(dp, grid);
    if (boundary_is_small(sol)) return sol;
    grid = Grid::symmetric(2.0 * grid.q_max, n_points);
  }
  throw ConvergenceError(
      "ground state does not decay inside the grid after doubling q_max " +
      std::to_string(kMaxGridRetries) + " times");
}

std::vector<double> trapezoid_weights(const Grid& grid) {
  std::vector<double> w(grid.n_points, grid.spacing());
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

HalfLineMass half_line_mass(const GroundSolution& sol) {
  const auto w = trapezoid_weights(sol.grid);
  HalfLineMass m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double q = sol.grid.point(i);
    const double p = w[i] * sol.wavefunction[i] * sol.wavefunction[i];
    if (q < 0.0) {
      m.negative += p;
    } else if (q > 0.0) {
      m.positive += p;
    } else {
      m.negative += 0.5 * p;
      m.positive += 0.5 * p;
    }
  }
  return m;
}

}  // namespace adiabatic
