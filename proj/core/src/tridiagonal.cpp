#include "adiabatic/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "adiabatic/errors.hpp"

namespace adiabatic {

namespace {

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

// Solves (T - shift I) x = b in place with an LDL^T factorization. The shift
// sits below the spectrum, so T - shift I is positive definite and no
// pivoting is needed; pivots that round to zero are nudged.
void shifted_solve(const SymmetricTridiagonal& t, double shift,
                   std::vector<double>& b, double tiny) {
  const std::size_t n = t.size();
  std::vector<double> pivot(n);
  std::vector<double> mult(n > 0 ? n - 1 : 0);
  pivot[0] = t.diagonal[0] - shift;
  if (std::abs(pivot[0]) < tiny) pivot[0] = tiny;
  for (std::size_t i = 1; i < n; ++i) {
    mult[i - 1] = t.off_diagonal[i - 1] / pivot[i - 1];
    pivot[i] = t.diagonal[i] - shift - mult[i - 1] * t.off_diagonal[i - 1];
    if (std::abs(pivot[i]) < tiny) pivot[i] = tiny;
  }
  for (std::size_t i = 1; i < n; ++i) b[i] -= mult[i - 1] * b[i - 1];
  for (std::size_t i = 0; i < n; ++i) b[i] /= pivot[i];
  for (std::size_t i = n - 1; i-- > 0;) b[i] -= mult[i] * b[i + 1];
}

}  // namespace

void SymmetricTridiagonal::multiply(std::span<const double> x,
                                    std::span<double> y) const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diagonal[i] * x[i];
    if (i > 0) acc += off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off_diagonal[i] * x[i + 1];
    y[i] = acc;
  }
}

std::size_t SymmetricTridiagonal::count_below(double x) const {
  const std::size_t n = size();
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = diagonal[0] - x;
  for (std::size_t i = 0;;) {
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
    if (++i == n) break;
    q = diagonal[i] - x - off_diagonal[i - 1] * off_diagonal[i - 1] / q;
  }
  return count;
}

double SymmetricTridiagonal::norm_inf() const {
  const std::size_t n = size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diagonal[i]);
    if (i > 0) row += std::abs(off_diagonal[i - 1]);
    if (i + 1 < n) row += std::abs(off_diagonal[i]);
    best = std::max(best, row);
  }
  return best;
}

Eigenpair smallest_eigenpair(const SymmetricTridiagonal& t, double tolerance,
                             int max_iterations) {
  const std::size_t n = t.size();
  if (n == 0) throw InvalidArgument("empty matrix");
  if (t.off_diagonal.size() + 1 != n) {
    throw InvalidArgument("off-diagonal length must be size - 1");
  }

  // Gershgorin bracket for the lowest eigenvalue.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - r);
    hi = std::max(hi, t.diagonal[i] + r);
  }
  const double scale = std::max(t.norm_inf(), std::numeric_limits<double>::min());

  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (t.count_below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double eigenvalue = hi;

  // Inverse iteration from just below the eigenvalue: T - shift I is then an
  // M-matrix when the off-diagonal is non-positive, keeping iterates positive.
  const double eps = std::numeric_limits<double>::epsilon();
  const double shift = eigenvalue - 64.0 * eps * scale;
  const double tiny = eps * scale;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> tv(n);
  Eigenpair out;
  for (int it = 0; it < max_iterations; ++it) {
    shifted_solve(t, shift, v, tiny);
    const double nv = norm2(v);
    if (!std::isfinite(nv) || nv == 0.0) {
      throw ConvergenceError("inverse iteration broke down");
    }
    for (double& x : v) x /= nv;

    t.multiply(v, tv);
    const double rayleigh = std::inner_product(v.begin(), v.end(), tv.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = tv[i] - rayleigh * v[i];
      r2 += r * r;
    }
    out.value = rayleigh;
    out.residual = std::sqrt(r2) / scale;
    if (out.residual <= tolerance) {
      out.vector = std::move(v);
      return out;
    }
  }
  throw ConvergenceError("inverse iteration did not reach residual " +
                         std::to_string(tolerance) + " (got " +
                         std::to_string(out.residual) + ")");
}

}  // namespace adiabatic
