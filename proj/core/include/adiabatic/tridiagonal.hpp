#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace adiabatic {

/// Real symmetric tridiagonal matrix: diagonal d[0..n), off-diagonal e[0..n-1).
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  [[nodiscard]] std::size_t size() const noexcept { return diagonal.size(); }

  /// y = T x
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Number of eigenvalues strictly below x (Sturm sequence count).
  [[nodiscard]] std::size_t count_below(double x) const;

  /// max_i sum_j |T_ij|, an upper bound on the spectral radius.
  [[nodiscard]] double norm_inf() const;
};

struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm
  double residual = 0.0;       // ||T v - value v||_2 / ||T||
};

/// Smallest eigenpair by Sturm bisection followed by inverse iteration.
/// The returned residual is relative to ||T||_inf and is guaranteed to be
/// below `tolerance`; otherwise ConvergenceError is thrown once
/// `max_iterations` inverse-iteration sweeps have been spent.
[[nodiscard]] Eigenpair smallest_eigenpair(const SymmetricTridiagonal& t,
                                           double tolerance = 1e-12,
                                           int max_iterations = 50);

}  // namespace adiabatic
