#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "adiabatic/adiabatic.hpp"
#include "oracles.hpp"
#include "reference.hpp"

using namespace adiabatic;

namespace {

DimensionlessParams at(double d, double w, double a) {
  return DimensionlessParams::from_alpha(d, w, a);
}

}  // namespace

TEST_CASE("Grid") {
  const auto g = Grid::symmetric(4.0, 9);
  CHECK(g.spacing() == 1.0);
  CHECK(g.point(0) == -4.0);
  CHECK(g.point(4) == 0.0);
  CHECK(g.point(8) == 4.0);
  CHECK(g.is_symmetric());
  const auto odd = Grid::symmetric(3.3, 2001);
  for (std::size_t i = 0; i < 2001; ++i) CHECK(odd.point(i) == -odd.point(2000 - i));
  CHECK_THROWS_AS((void)Grid::symmetric(4.0, 2), InvalidArgument);
  CHECK_THROWS_AS((void)Grid::symmetric(-1.0, 11), InvalidArgument);
  CHECK_THROWS_AS((void)Grid::symmetric(NAN, 11), InvalidArgument);
  CHECK_FALSE(Grid{-1.0, 2.0, 11}.is_symmetric());
}

TEST_CASE("auto_grid") {
  const auto g2 = auto_grid(at(10.0, 0.0, 2.0));
  CHECK(g2.q_max == doctest::Approx(std::sqrt(30.0) / 2.0 + 8.0 / std::sqrt(0.975)).epsilon(1e-14));
  CHECK(g2.q_max == doctest::Approx(10.84).epsilon(1e-3));
  CHECK(g2.is_symmetric());
  const auto g0 = auto_grid(at(10.0, 0.0, 0.0));
  CHECK(g0.q_max == 8.0);
  CHECK(g0.n_points == 2001);
  CHECK(auto_grid(at(10.0, 0.0, 0.999)).q_max == doctest::Approx(8.0 / std::sqrt(0.05)).epsilon(1e-14));
  CHECK_THROWS_AS((void)auto_grid(DimensionlessParams(0.0, 0.0, 1.0)), InvalidArgument);
}

TEST_CASE("solve_ground energies") {
  SUBCASE("harmonic oscillator") {
    // The 3-point stencil misses the harmonic E0 by h^2/32 to leading order.
    const auto sol = solve_ground_auto(at(10.0, 0.0, 0.0));
    const double h = sol.grid.spacing();
    CHECK(sol.energy - (-4.5) == doctest::Approx(-h * h / 32.0).epsilon(1e-3));
    const auto fine = solve_ground_auto(at(10.0, 0.0, 0.0), 4001);
    CHECK(std::abs(fine.energy - (-4.5)) < 1e-6);
  }
  SUBCASE("against the Hermite-basis oracle") {
    for (const auto& p : ref::kHermite) {
      CAPTURE(p.big_w);
      CAPTURE(p.alpha);
      const auto sol = solve_ground_auto(at(ref::kHermiteD, p.big_w, p.alpha));
      // 3-point differences at h ~ 0.01: O(h^2) ~ 5e-6.
      CHECK(std::abs(sol.energy - p.e0) < 1e-5);
    }
  }
  SUBCASE("alpha=0.5: harmonic plus first quartic correction") {
    const double d = 10.0;
    const double a = 0.5;
    const double k = std::sqrt(1.0 - a);
    const double estimate = k / 2.0 - d / 2.0 + 3.0 * a * a / (16.0 * d * k * k);
    const double e0 = solve_ground_auto(at(d, 0.0, a)).energy;
    CHECK(std::abs(e0 - estimate) < 5e-3);
    CHECK(std::abs(e0 - (-4.638695741505)) < 1e-5);
  }
  SUBCASE("alpha=3: two-Gaussian estimate") {
    const double d = 10.0;
    const double a = 3.0;
    const double kp = 1.0 - 1.0 / (d * a * a);
    const double estimate = -(d / 4.0) * (a + 1.0 / a) + kp / 2.0;
    CHECK(estimate == doctest::Approx(-7.839).epsilon(1e-3));
    CHECK(std::abs(solve_ground_auto(at(d, 0.0, a)).energy - estimate) < 5e-2);
  }
}

TEST_CASE("ground state shape") {
  SUBCASE("W=0 is parity symmetric") {
    const auto sol = solve_ground_auto(at(10.0, 0.0, 2.0));
    const std::size_t n = sol.wavefunction.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(sol.wavefunction[i] - sol.wavefunction[n - 1 - i]));
    }
    CHECK(worst < 1e-8);
    const auto m = half_line_mass(sol);
    CHECK(std::abs(m.negative - m.positive) < 1e-8);
    CHECK(m.negative + m.positive == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("W=0.1 localizes in one well") {
    const auto m = half_line_mass(solve_ground_auto(at(10.0, 0.1, 2.0)));
    CHECK(std::max(m.negative, m.positive) >= 0.95);
    CHECK(m.positive > m.negative);
  }
  SUBCASE("pointwise agreement with the oracle wavefunction") {
    for (double w : {0.0, 0.1}) {
      const auto dp = at(10.0, w, 2.0);
      const auto sol = solve_ground_auto(dp);
      oracle::HermiteGround g(dp, 160, 300, 1.2);
      double worst = 0.0;
      for (std::size_t i = 0; i < sol.wavefunction.size(); i += 7) {
        worst = std::max(worst, std::abs(sol.wavefunction[i] - g.wavefunction(sol.grid.point(i))));
      }
      CHECK(worst < 1e-5);
    }
  }
  SUBCASE("node-free, normalized, decayed at the edges") {
    for (double a : {0.0, 0.9, 1.0, 1.1, 5.0}) {
      const auto sol = solve_ground_auto(at(10.0, 0.3, a));
      CHECK(*std::min_element(sol.wavefunction.begin(), sol.wavefunction.end()) >= 0.0);
      double norm = 0.0;
      for (double v : sol.wavefunction) norm += v * v * sol.grid.spacing();
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(boundary_is_small(sol));
    }
  }
}

TEST_CASE("auto solve enlarges a grid that is too small") {
  // Strong bias pushes the well out to Q ~ L/2, past the symmetric-case estimate.
  const auto dp = at(200.0, 100.0, 1.05);
  CHECK_FALSE(boundary_is_small(solve_ground(dp, auto_grid(dp))));
  const auto sol = solve_ground_auto(dp);
  CHECK(boundary_is_small(sol));
  CHECK(sol.grid.q_max > auto_grid(dp).q_max);
}

TEST_CASE("fixed grid: second-order convergence") {
  const auto dp = at(10.0, 0.2, 1.5);
  const double half = auto_grid(dp).q_max;
  const double e1 = solve_ground(dp, Grid::symmetric(half, 501)).energy;
  const double e2 = solve_ground(dp, Grid::symmetric(half, 1001)).energy;
  const double e3 = solve_ground(dp, Grid::symmetric(half, 2001)).energy;
  CHECK(std::log2((e1 - e2) / (e2 - e3)) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("trapezoid weights") {
  const auto w = trapezoid_weights(Grid::symmetric(1.0, 5));
  REQUIRE(w.size() == 5);
  CHECK(w[0] == 0.25);
  CHECK(w[2] == 0.5);
  CHECK(w[4] == 0.25);
}
