#pragma once

// Command implementations behind the adiabatic-cli executable. Kept in a
// library so tests can drive them in-process.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "adiabatic/adiabatic.hpp"

namespace adiabatic::cli {

enum class ExitCode : int { Ok = 0, InvalidArguments = 2, NumericalFailure = 3 };

enum class OutputFormat { Csv, Json };

struct SolverOptions {
  std::optional<double> q_max;  // symmetric grid half-width; auto grid when empty
  std::size_t n_points = kDefaultGridPoints;
  bool operator==(const SolverOptions&) const = default;
};

struct SweepSpec {
  std::vector<double> alpha;
  std::vector<double> big_d{10.0};
  std::vector<double> big_w{0.0};
  SolverOptions solver;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;

  /// Non-empty grids, alpha >= 0, D > 0, finite entries, n_points >= 3.
  /// Throws InvalidArgument.
  void validate() const;
  [[nodiscard]] std::size_t size() const {
    return alpha.size() * big_d.size() * big_w.size();
  }
  bool operator==(const SweepSpec&) const = default;
};

void to_json(nlohmann::json& j, const SolverOptions& o);
void from_json(const nlohmann::json& j, SolverOptions& o);
void to_json(nlohmann::json& j, const SweepSpec& s);
void from_json(const nlohmann::json& j, SweepSpec& s);

using Cell = std::variant<double, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// printf "%.12e".
std::string format_number(double x);
std::string to_csv(const Table& t);
nlohmann::json to_json_rows(const Table& t);

GroundSolution solve(const DimensionlessParams& dp, const SolverOptions& opt);

/// Q,U_lower,U_upper on a symmetric grid.
Table potential_table(const DimensionlessParams& dp, const Grid& grid);
/// Q,phi0.
Table wavefunction_table(const GroundSolution& sol);

struct PointResult {
  double b_x = 0.0;
  double b_z = 0.0;
  double tangle = 0.0;
  double e0 = 0.0;
};
using PointEvaluator =
    std::function<PointResult(const DimensionlessParams&, const SolverOptions&)>;

PointResult evaluate_point(const DimensionlessParams& dp, const SolverOptions& opt);

/// alpha,D,W,bx,bz,tangle,E0 in grid order (D outer, then W, alpha inner).
/// Points run on `threads` workers (0: hardware concurrency). A point whose
/// evaluation throws gets `error` in every computed column.
Table sweep_table(const SweepSpec& spec, unsigned threads = 0,
                  const PointEvaluator& eval = evaluate_point);

struct ExactComparison {
  double big_d = 0.0;
  double big_w = 0.0;
  double alpha = 0.0;
  std::size_t n_boson = 0;
  double truncation_shift = 0.0;
  double tau_adiabatic = 0.0;
  double tau_exact = 0.0;
  double delta = 0.0;  // tau_exact - tau_adiabatic
  double e0_adiabatic = 0.0;
  double e0_exact = 0.0;  // includes the zero-point 1/2
};

ExactComparison compare_exact(const DimensionlessParams& dp,
                              std::optional<std::size_t> n_boson,
                              const SolverOptions& opt);
nlohmann::json to_json(const ExactComparison& c);
Table to_table(const ExactComparison& c);

/// D -> infinity results for each alpha at epsilon/Delta = W/D.
/// alpha,bx,bz,tangle,degenerate.
Table massive_table(std::span<const double> alphas, double big_w, double big_d);

/// Full command line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adiabatic::cli
