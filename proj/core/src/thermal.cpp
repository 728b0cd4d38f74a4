#include "adiabatic/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "adiabatic/asymptotics.hpp"
#include "adiabatic/errors.hpp"

namespace adiabatic {

namespace {

constexpr double kWindowSigmas = 10.0;
constexpr double kNegligibleLog = -60.0;  // e^-60 relative to the peak
constexpr double kPanelTolerance = 1e-12;
constexpr unsigned kMaxPanelDepth = 12;
constexpr std::size_t kMaxPanels = 200000;

struct Integrals {
  double z = 0.0;   // int e^{g-M} (1 + e^{-2 beta Delta})
  double bx = 0.0;  // int (delta/Delta) e^{g-M} (1 - e^{-2 beta Delta})
  double bz = 0.0;  // int ((eps + lambda q)/Delta) e^{g-M} (1 - e^{-2 beta Delta})
  double shift = 0.0;  // M
};

class ThermalIntegrand {
 public:
  explicit ThermalIntegrand(const ThermalParams& tp)
      : beta_(tp.beta), p_(tp.model) {}

  double gap(double q) const { return std::hypot(p_.delta, p_.epsilon + p_.lambda * q); }

  // g(q) = -beta V(q)
  double exponent(double q) const {
    return beta_ * (gap(q) - 0.5 * p_.mass * p_.omega * p_.omega * q * q);
  }

  double sigma() const { return 1.0 / std::sqrt(beta_ * p_.mass * p_.omega * p_.omega); }

  // Stationary points of V (and the kink of |epsilon + lambda q| when
  // delta = 0), plus the Gaussian centre.
  std::vector<double> centres() const {
    std::vector<double> c{0.0};
    if (p_.delta > 0.0) {
      const SaddleSet s = saddle_points(p_);
      c.insert(c.end(), s.roots.begin(), s.roots.end());
    } else if (p_.lambda > 0.0) {
      const double reach = p_.lambda / (p_.mass * p_.omega * p_.omega);
      c.push_back(-p_.epsilon / p_.lambda);
      if (p_.epsilon + p_.lambda * reach > 0.0) c.push_back(reach);
      if (p_.epsilon - p_.lambda * reach < 0.0) c.push_back(-reach);
    }
    return c;
  }

  double weight_z(double q, double shift) const {
    const double d = gap(q);
    return std::exp(exponent(q) - shift) * (1.0 + std::exp(-2.0 * beta_ * d));
  }

  // e^{g-M} (1 - e^{-2 beta Delta}) / Delta; the Delta -> 0 limit is 2 beta.
  double sinh_over_gap(double q, double shift) const {
    const double d = gap(q);
    const double tail = d > 0.0 ? -std::expm1(-2.0 * beta_ * d) / d : 2.0 * beta_;
    return std::exp(exponent(q) - shift) * tail;
  }

  const ModelParams& model() const { return p_; }

 private:
  double beta_;
  ModelParams p_;
};

Integrals integrate(const ThermalParams& tp, bool with_bloch) {
  tp.validate();
  const ThermalIntegrand f(tp);
  const auto centres = f.centres();

  double shift = -std::numeric_limits<double>::infinity();
  for (double c : centres) shift = std::max(shift, f.exponent(c));

  const double sigma = f.sigma();
  double lo = *std::min_element(centres.begin(), centres.end()) - kWindowSigmas * sigma;
  double hi = *std::max_element(centres.begin(), centres.end()) + kWindowSigmas * sigma;
  // The window must also cover slow tails where e.g. a flat potential near
  // alpha = 1 widens the peak beyond the Gaussian width.
  for (int i = 0; i < 100000 && f.exponent(lo) - shift > kNegligibleLog; ++i) lo -= sigma;
  for (int i = 0; i < 100000 && f.exponent(hi) - shift > kNegligibleLog; ++i) hi += sigma;

  const auto n_panels = std::min<std::size_t>(
      kMaxPanels, static_cast<std::size_t>(std::ceil((hi - lo) / (2.0 * sigma))));
  const double width = (hi - lo) / static_cast<double>(n_panels);

  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  const ModelParams& p = f.model();
  Integrals out;
  out.shift = shift;
  for (std::size_t k = 0; k < n_panels; ++k) {
    const double a = lo + static_cast<double>(k) * width;
    const double b = k + 1 == n_panels ? hi : a + width;
    double err = 0.0;
    out.z += Rule::integrate([&](double q) { return f.weight_z(q, shift); }, a, b,
                             kMaxPanelDepth, kPanelTolerance, &err);
    if (with_bloch) {
      out.bx += Rule::integrate(
          [&](double q) { return p.delta * f.sinh_over_gap(q, shift); }, a, b,
          kMaxPanelDepth, kPanelTolerance, &err);
      out.bz += Rule::integrate(
          [&](double q) {
            return (p.epsilon + p.lambda * q) * f.sinh_over_gap(q, shift);
          },
          a, b, kMaxPanelDepth, kPanelTolerance, &err);
    }
  }
  if (!(out.z > 0.0) || !std::isfinite(out.z)) {
    throw ConvergenceError("partition-function quadrature failed");
  }
  return out;
}

}  // namespace

void ThermalParams::validate() const {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("beta must be positive and finite");
  }
  model.validate();
}

double log_partition_function(const ThermalParams& tp) {
  const Integrals in = integrate(tp, false);
  return in.shift + std::log(in.z);
}

double partition_function(const ThermalParams& tp) {
  const double log_z = log_partition_function(tp);
  if (log_z > std::log(std::numeric_limits<double>::max())) {
    throw ConvergenceError("Z overflows a double (ln Z = " +
                           std::to_string(log_z) + ")");
  }
  return std::exp(log_z);
}

QubitState thermal_bloch(const ThermalParams& tp) {
  const Integrals in = integrate(tp, true);
  return {-in.bx / in.z, -in.bz / in.z};
}

ZeroTemperatureEstimate zero_temperature_extrapolation(
    const ModelParams& p, std::span<const double> betas) {
  p.validate();
  if (betas.size() < 3) throw InvalidArgument("need at least three betas");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0)) throw InvalidArgument("betas must be positive");
    if (i > 0 && !(betas[i] > betas[i - 1])) {
      throw InvalidArgument("betas must be strictly increasing");
    }
  }
  const bool frozen = p.delta == 0.0;
  if (p.epsilon == 0.0 && (frozen || p.alpha() > 1.0)) {
    throw DegenerateGroundState(
        "epsilon = 0 with alpha > 1 has degenerate ground states; the "
        "zero-temperature limit of b_z is ill-posed");
  }

  const auto n = static_cast<Eigen::Index>(betas.size());
  const Eigen::Index degree = std::min<Eigen::Index>(2, n - 2);
  Eigen::MatrixXd design(n, degree + 1);
  Eigen::MatrixXd data(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = 1.0 / betas[static_cast<std::size_t>(i)];
    double power = 1.0;
    for (Eigen::Index j = 0; j <= degree; ++j) {
      design(i, j) = power;
      power *= x;
    }
    const QubitState s = thermal_bloch({betas[static_cast<std::size_t>(i)], p});
    data(i, 0) = s.b_x();
    data(i, 1) = s.b_z();
  }
  const Eigen::MatrixXd coeffs = design.colPivHouseholderQr().solve(data);
  const Eigen::MatrixXd fit = design * coeffs;

  ZeroTemperatureEstimate out;
  out.fit_residual = (fit - data).cwiseAbs().maxCoeff();
  double bx = coeffs(0, 0);
  double bz = coeffs(0, 1);
  const double norm = std::hypot(bx, bz);
  if (norm > 1.0) {
    // Extrapolation can overshoot the Bloch sphere by about the fit error.
    bx /= norm;
    bz /= norm;
  }
  out.state = QubitState(bx, bz);
  return out;
}

}  // namespace adiabatic
