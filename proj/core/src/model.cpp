#include "adiabatic/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {

namespace {

bool finite(double x) { return std::isfinite(x); }

// Bisection on a sign change of f over [a, b]; runs to floating-point
// resolution of the bracket.
template <typename F>
double bisect(F&& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
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

}  // namespace

void ModelParams::validate() const {
  if (!finite(delta) || !finite(epsilon) || !finite(omega) || !finite(lambda) ||
      !finite(mass)) {
    throw InvalidArgument("model parameters must be finite");
  }
  if (omega <= 0.0) throw InvalidArgument("omega must be positive");
  if (mass <= 0.0) throw InvalidArgument("mass must be positive");
  if (delta < 0.0) throw InvalidArgument("delta must be non-negative");
  if (lambda < 0.0) {
    throw InvalidArgument(
        "lambda must be non-negative (use with_nonnegative_coupling)");
  }
}

ModelParams ModelParams::with_nonnegative_coupling() const {
  ModelParams p = *this;
  p.lambda = std::abs(lambda);
  return p;
}

double ModelParams::alpha() const {
  if (delta == 0.0) throw InvalidArgument("alpha is undefined for delta = 0");
  return lambda * lambda / (mass * omega * omega * delta);
}

DimensionlessParams::DimensionlessParams(double big_d, double big_w,
                                         double big_l)
    : big_d_(big_d), big_w_(big_w), big_l_(big_l) {
  if (!finite(big_d) || !finite(big_w) || !finite(big_l)) {
    throw InvalidArgument("dimensionless parameters must be finite");
  }
  if (big_d < 0.0) throw InvalidArgument("D must be non-negative");
  if (big_l < 0.0) throw InvalidArgument("L must be non-negative");
}

DimensionlessParams DimensionlessParams::from_alpha(double big_d, double big_w,
                                                    double alpha) {
  if (!(big_d > 0.0)) {
    throw InvalidArgument("D must be positive to parameterize by alpha");
  }
  if (!(alpha >= 0.0) || !finite(alpha)) {
    throw InvalidArgument("alpha must be non-negative");
  }
  return {big_d, big_w, std::sqrt(2.0 * big_d * alpha)};
}

double DimensionlessParams::alpha() const {
  if (big_d_ == 0.0) throw InvalidArgument("alpha is undefined for D = 0");
  return big_l_ * big_l_ / (2.0 * big_d_);
}

DimensionlessParams to_dimensionless(const ModelParams& p) {
  const ModelParams q = p.with_nonnegative_coupling();
  q.validate();
  return {2.0 * q.delta / q.omega, 2.0 * q.epsilon / q.omega,
          2.0 * q.lambda / std::sqrt(q.mass * q.omega * q.omega * q.omega)};
}

ModelParams to_physical(const DimensionlessParams& dp, double omega,
                        double mass) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  if (!(mass > 0.0)) throw InvalidArgument("mass must be positive");
  ModelParams p;
  p.omega = omega;
  p.mass = mass;
  p.delta = 0.5 * dp.big_d() * omega;
  p.epsilon = 0.5 * dp.big_w() * omega;
  p.lambda = 0.5 * dp.big_l() * std::sqrt(mass * omega * omega * omega);
  return p;
}

double adiabatic_gap(const DimensionlessParams& dp, double q) {
  return std::hypot(dp.big_d(), dp.bias(q));
}

QubitAmplitudes qubit_eigenstate(const DimensionlessParams& dp, double q,
                                 AdiabaticBranch /*branch*/) {
  const double x = dp.bias(q);
  const double e = adiabatic_gap(dp, q);
  if (e == 0.0) {
    throw DegeneratePoint("qubit eigenstates undefined where E(Q) = 0 (Q = " +
                          std::to_string(q) + ")");
  }
  // 1 - |x|/E = D^2 / (E (E + |x|)) avoids cancellation as D -> 0.
  const double large = std::sqrt((e + std::abs(x)) / e);
  const double small = dp.big_d() / std::sqrt(e * (e + std::abs(x)));
  if (x >= 0.0) return {large, small};
  return {small, large};
}

std::array<double, 2> qubit_state_vector(const DimensionlessParams& dp,
                                         double q, AdiabaticBranch branch) {
  const auto [ap, am] = qubit_eigenstate(dp, q, branch);
  const double s = 1.0 / std::sqrt(2.0);
  if (branch == AdiabaticBranch::Lower) return {s * am, -s * ap};
  return {s * ap, s * am};
}

double adiabatic_potential(const DimensionlessParams& dp, double q,
                           AdiabaticBranch branch) {
  const double e = adiabatic_gap(dp, q);
  return branch == AdiabaticBranch::Lower ? 0.5 * (q * q - e)
                                          : 0.5 * (q * q + e);
}

double lower_potential_slope(const DimensionlessParams& dp, double q) {
  const double e = adiabatic_gap(dp, q);
  if (e == 0.0) return q;
  return q - 0.5 * dp.big_l() * dp.bias(q) / e;
}

double lower_potential_curvature(const DimensionlessParams& dp, double q) {
  const double e = adiabatic_gap(dp, q);
  const double l = dp.big_l();
  const double d = dp.big_d();
  return 1.0 - 0.5 * l * l * d * d / (e * e * e);
}

double symmetric_well_offset(const DimensionlessParams& dp) {
  if (!(dp.big_d() > 0.0)) throw InvalidArgument("D must be positive");
  const double a = dp.alpha();
  if (a <= 1.0) return 0.0;
  return dp.big_d() / dp.big_l() * std::sqrt(a * a - 1.0);
}

std::vector<WellMinimum> well_minima(const DimensionlessParams& dp) {
  if (!(dp.big_d() > 0.0)) throw InvalidArgument("well_minima requires D > 0");
  const double d = dp.big_d();
  const double a = dp.alpha();

  if (dp.big_w() == 0.0) {
    if (a <= 1.0) return {{0.0, -0.5 * d}};
    const double q0 = symmetric_well_offset(dp);
    const double u0 = -0.25 * d * (a + 1.0 / a);
    return {{-q0, u0}, {q0, u0}};
  }

  // Stationary points satisfy |Q| <= L/2 because |W + LQ| <= E(Q).
  const double q0 = a > 1.0 ? symmetric_well_offset(dp) : 1.0;
  const double half_width = std::max(q0 + 4.0, 0.5 * dp.big_l() + 1.0);
  const double step = 0.01;
  const auto n_steps = static_cast<long>(std::ceil(2.0 * half_width / step));
  auto slope = [&](double q) { return lower_potential_slope(dp, q); };

  std::vector<WellMinimum> minima;
  double q_prev = -half_width;
  double s_prev = slope(q_prev);
  for (long i = 1; i <= n_steps; ++i) {
    const double q = -half_width + static_cast<double>(i) * step;
    const double s = slope(q);
    if (s_prev < 0.0 && s >= 0.0) {
      const double root = s == 0.0 ? q : bisect(slope, q_prev, q);
      minima.push_back({root, adiabatic_potential(dp, root, AdiabaticBranch::Lower)});
    }
    q_prev = q;
    s_prev = s;
  }
  std::sort(minima.begin(), minima.end(),
            [](const WellMinimum& x, const WellMinimum& y) {
              return x.u_min < y.u_min;
            });
  return minima;
}

}  // namespace adiabatic
