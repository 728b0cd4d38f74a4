#include "adiabatic/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {

namespace {

constexpr long kScanSteps = 20000;  // per half-line
constexpr double kRootResidual = 1e-10;
constexpr double kDegeneracyTolerance = 1e-12;

double massive_gap(const ModelParams& p, double q) {
  return std::hypot(p.delta, p.epsilon + p.lambda * q);
}

// q - (lambda/(m omega^2)) (epsilon + lambda q)/Delta(q)
double fixed_point_residual(const ModelParams& p, double q) {
  const double c = p.lambda / (p.mass * p.omega * p.omega);
  return q - c * (p.epsilon + p.lambda * q) / massive_gap(p, q);
}

double bisect(const ModelParams& p, double a, double b) {
  double fa = fixed_point_residual(p, a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = fixed_point_residual(p, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

void require_zero_bias(const DimensionlessParams& dp) {
  if (dp.big_w() != 0.0) {
    throw InvalidArgument("expansion only available for W = 0");
  }
}

}  // namespace

double bx_small_alpha(const DimensionlessParams& dp) {
  require_zero_bias(dp);
  const double a = dp.alpha();
  if (!(a < 1.0)) throw InvalidArgument("small-alpha expansion requires alpha < 1");
  return -1.0 + a / (2.0 * dp.big_d() * std::sqrt(1.0 - a));
}

double bx_large_alpha(const DimensionlessParams& dp) {
  require_zero_bias(dp);
  const double a = dp.alpha();
  if (!(a > 1.0)) throw InvalidArgument("large-alpha expansion requires alpha > 1");
  return -1.0 / a - 2.0 / (dp.big_d() * a * a);
}

double massive_tangle(double alpha) {
  if (!(alpha >= 0.0)) throw InvalidArgument("alpha must be non-negative");
  if (alpha <= 1.0) return 0.0;
  return 1.0 - 1.0 / (alpha * alpha);
}

double massive_potential(const ModelParams& p, double q) {
  return 0.5 * p.mass * p.omega * p.omega * q * q - massive_gap(p, q);
}

double massive_potential_slope(const ModelParams& p, double q) {
  return p.mass * p.omega * p.omega * fixed_point_residual(p, q);
}

SaddleSet saddle_points(const ModelParams& p) {
  p.validate();
  if (!(p.delta > 0.0)) throw InvalidArgument("saddle_points requires delta > 0");

  SaddleSet out;
  const double reach = p.lambda / (p.mass * p.omega * p.omega);
  if (reach == 0.0) {
    out.roots = {0.0};
    out.global_min = 0.0;
    return out;
  }

  // Symmetric scan through q = 0 so that the epsilon = 0 root is hit exactly.
  const double half_width = 1.05 * reach;
  const double step = half_width / static_cast<double>(kScanSteps);
  double q_prev = -half_width;
  double r_prev = fixed_point_residual(p, q_prev);
  for (long i = -kScanSteps + 1; i <= kScanSteps; ++i) {
    const double q = static_cast<double>(i) * step;
    const double r = fixed_point_residual(p, q);
    if (r == 0.0) {
      out.roots.push_back(q);
      continue;  // keep q_prev/r_prev at the last non-zero sample
    }
    if ((r < 0.0) != (r_prev < 0.0) && r_prev != 0.0) {
      const bool already = !out.roots.empty() && out.roots.back() > q_prev;
      if (!already) out.roots.push_back(bisect(p, q_prev, q));
    }
    q_prev = q;
    r_prev = r;
  }
  if (out.roots.empty()) {
    throw ConvergenceError("no stationary point found in |q| <= " +
                           std::to_string(half_width));
  }
  for (double root : out.roots) {
    const double res = std::abs(fixed_point_residual(p, root));
    if (res > kRootResidual) {
      throw ConvergenceError("stationary point residual " + std::to_string(res));
    }
  }
  std::sort(out.roots.begin(), out.roots.end());

  std::vector<double> energies;
  for (double root : out.roots) energies.push_back(massive_potential(p, root));
  const auto best = std::min_element(energies.begin(), energies.end());
  const double v_min = *best;
  const double tol = kDegeneracyTolerance * std::max(1.0, std::abs(v_min));
  int n_lowest = 0;
  double chosen = out.roots[static_cast<std::size_t>(best - energies.begin())];
  for (std::size_t i = 0; i < energies.size(); ++i) {
    if (energies[i] - v_min <= tol) {
      ++n_lowest;
      chosen = std::max(chosen, out.roots[i]);
    }
  }
  out.degenerate = n_lowest > 1;
  out.global_min = chosen;
  return out;
}

QubitState massive_bloch(const ModelParams& p, WellSelection selection) {
  const SaddleSet s = saddle_points(p);
  double q_m = s.global_min;
  if (s.degenerate) {
    if (selection == WellSelection::Unique) {
      throw DegenerateGroundState(
          "massive-limit minima are degenerate (epsilon = 0, alpha > 1); "
          "pass a well selection or use the symmetric mixture");
    }
    const double v_min = massive_potential(p, s.global_min);
    const double tol = kDegeneracyTolerance * std::max(1.0, std::abs(v_min));
    for (double root : s.roots) {
      const bool lowest = massive_potential(p, root) - v_min <= tol;
      const bool side = selection == WellSelection::Positive ? root > 0.0 : root < 0.0;
      if (lowest && side) q_m = root;
    }
  }
  const double gap = massive_gap(p, q_m);
  const double bx = -p.delta / gap;
  const double bz = -(p.epsilon + p.lambda * q_m) / gap;
  // |b| = 1 up to rounding; rescale so the invariant holds to the last bit.
  const double n = std::hypot(bx, bz);
  return {bx / n, bz / n};
}

QubitState massive_bloch_symmetric_mixture(const ModelParams& p) {
  if (p.epsilon != 0.0) {
    throw InvalidArgument("symmetric mixture is only defined for epsilon = 0");
  }
  const SaddleSet s = saddle_points(p);
  return {-p.delta / massive_gap(p, s.global_min), 0.0};
}

}  // namespace adiabatic
