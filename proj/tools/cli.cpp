#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

namespace adiabatic::cli {

namespace {

void require_finite(const std::vector<double>& v, const char* name) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(name) + " entries must be finite");
  }
}

double single(const std::vector<double>& v, const char* name) {
  if (v.size() != 1) {
    throw InvalidArgument(std::string("--") + name + " takes exactly one value for this command");
  }
  return v.front();
}

void validate_solver(const SolverOptions& o) {
  if (o.n_points < 3) throw InvalidArgument("--n-points must be at least 3");
  if (o.q_max && !(std::isfinite(*o.q_max) && *o.q_max > 0.0)) {
    throw InvalidArgument("--q-max must be positive");
  }
}

std::vector<Cell> sweep_row(double alpha, double d, double w, const SolverOptions& opt,
                            const PointEvaluator& eval) {
  std::vector<Cell> row{alpha, d, w};
  try {
    const auto r = eval(DimensionlessParams::from_alpha(d, w, alpha), opt);
    row.insert(row.end(), {r.b_x, r.b_z, r.tangle, r.e0});
  } catch (const std::exception&) {
    row.insert(row.end(), 4, Cell{std::string("error")});
  }
  return row;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file " + path);
  file << text;
  if (!file) throw InvalidArgument("cannot write output file " + path);
}

std::string render(const Table& t, OutputFormat f) {
  if (f == OutputFormat::Csv) return to_csv(t);
  return to_json_rows(t).dump(2) + "\n";
}

}  // namespace

void SweepSpec::validate() const {
  if (alpha.empty() || big_d.empty() || big_w.empty()) {
    throw InvalidArgument("sweep grids must be non-empty");
  }
  require_finite(alpha, "alpha");
  require_finite(big_d, "D");
  require_finite(big_w, "W");
  for (double a : alpha) {
    if (a < 0.0) throw InvalidArgument("alpha entries must be >= 0");
  }
  for (double d : big_d) {
    if (!(d > 0.0)) throw InvalidArgument("D entries must be > 0");
  }
  validate_solver(solver);
}

void to_json(nlohmann::json& j, const SolverOptions& o) {
  j = nlohmann::json{{"n_points", o.n_points}};
  j["q_max"] = o.q_max ? nlohmann::json(*o.q_max) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, SolverOptions& o) {
  o.n_points = j.at("n_points").get<std::size_t>();
  const auto& q = j.at("q_max");
  o.q_max = q.is_null() ? std::nullopt : std::optional<double>(q.get<double>());
}

void to_json(nlohmann::json& j, const SweepSpec& s) {
  j = nlohmann::json{{"alpha", s.alpha},
                     {"D", s.big_d},
                     {"W", s.big_w},
                     {"solver", s.solver},
                     {"output", s.output},
                     {"format", s.format == OutputFormat::Csv ? "csv" : "json"}};
}

void from_json(const nlohmann::json& j, SweepSpec& s) {
  j.at("alpha").get_to(s.alpha);
  j.at("D").get_to(s.big_d);
  j.at("W").get_to(s.big_w);
  j.at("solver").get_to(s.solver);
  j.at("output").get_to(s.output);
  const auto f = j.at("format").get<std::string>();
  if (f != "csv" && f != "json") throw InvalidArgument("unknown format " + f);
  s.format = f == "csv" ? OutputFormat::Csv : OutputFormat::Json;
}

std::string format_number(double x) {
  char buf[64];
  if (x == 0.0) x = 0.0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) s += ',';
    s += t.header[i];
  }
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        s += format_number(*d);
      } else if (const auto* b = std::get_if<bool>(&row[i])) {
        s += *b ? "true" : "false";
      } else {
        s += std::get<std::string>(row[i]);
      }
    }
    s += '\n';
  }
  return s;
}

nlohmann::json to_json_rows(const Table& t) {
  auto rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.header[i]] = v; }, row[i]);
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

GroundSolution solve(const DimensionlessParams& dp, const SolverOptions& opt) {
  validate_solver(opt);
  if (opt.q_max) return solve_ground(dp, Grid::symmetric(*opt.q_max, opt.n_points));
  return solve_ground_auto(dp, opt.n_points);
}

Table potential_table(const DimensionlessParams& dp, const Grid& grid) {
  grid.validate();
  Table t{{"Q", "U_lower", "U_upper"}, {}};
  t.rows.reserve(grid.n_points);
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double q = grid.point(i);
    t.rows.push_back({q, adiabatic_potential(dp, q, AdiabaticBranch::Lower),
                      adiabatic_potential(dp, q, AdiabaticBranch::Upper)});
  }
  return t;
}

Table wavefunction_table(const GroundSolution& sol) {
  Table t{{"Q", "phi0"}, {}};
  t.rows.reserve(sol.wavefunction.size());
  for (std::size_t i = 0; i < sol.wavefunction.size(); ++i) {
    t.rows.push_back({sol.grid.point(i), sol.wavefunction[i]});
  }
  return t;
}

PointResult evaluate_point(const DimensionlessParams& dp, const SolverOptions& opt) {
  const auto sol = solve(dp, opt);
  const auto b = bloch_vector(dp, sol);
  return {b.b_x(), b.b_z(), tangle(b).value, sol.energy};
}

Table sweep_table(const SweepSpec& spec, unsigned threads, const PointEvaluator& eval) {
  spec.validate();
  struct Point {
    double alpha, d, w;
  };
  std::vector<Point> points;
  points.reserve(spec.size());
  for (double d : spec.big_d) {
    for (double w : spec.big_w) {
      for (double a : spec.alpha) points.push_back({a, d, w});
    }
  }

  Table t{{"alpha", "D", "W", "bx", "bz", "tangle", "E0"}, {}};
  t.rows.resize(points.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, points.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      t.rows[i] = sweep_row(points[i].alpha, points[i].d, points[i].w, spec.solver, eval);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return t;
}

ExactComparison compare_exact(const DimensionlessParams& dp,
                              std::optional<std::size_t> n_boson,
                              const SolverOptions& opt) {
  ExactComparison c;
  c.big_d = dp.big_d();
  c.big_w = dp.big_w();
  c.alpha = dp.alpha();

  const auto sol = solve(dp, opt);
  c.tau_adiabatic = tangle(bloch_vector(dp, sol)).value;
  c.e0_adiabatic = sol.energy;

  std::optional<FockTruncation> tr;
  if (n_boson) tr = FockTruncation{*n_boson};
  const auto exact = converged_ground_state(dp, tr);
  c.n_boson = exact.ground.truncation.n_boson;
  c.truncation_shift = exact.energy_shift;
  c.tau_exact = tangle(exact_qubit_state(exact.ground)).value;
  c.e0_exact = exact.ground.energy + 0.5;
  c.delta = c.tau_exact - c.tau_adiabatic;
  return c;
}

nlohmann::json to_json(const ExactComparison& c) {
  return {{"D", c.big_d},
          {"W", c.big_w},
          {"alpha", c.alpha},
          {"n_boson", c.n_boson},
          {"truncation_shift", c.truncation_shift},
          {"tau_adiabatic", c.tau_adiabatic},
          {"tau_exact", c.tau_exact},
          {"delta", c.delta},
          {"E0_adiabatic", c.e0_adiabatic},
          {"E0_exact", c.e0_exact}};
}

Table to_table(const ExactComparison& c) {
  return {{"D", "W", "alpha", "n_boson", "truncation_shift", "tau_adiabatic",
           "tau_exact", "delta", "E0_adiabatic", "E0_exact"},
          {{c.big_d, c.big_w, c.alpha, static_cast<double>(c.n_boson),
            c.truncation_shift, c.tau_adiabatic, c.tau_exact, c.delta,
            c.e0_adiabatic, c.e0_exact}}};
}

Table massive_table(std::span<const double> alphas, double big_w, double big_d) {
  if (alphas.empty()) throw InvalidArgument("alpha grid must be non-empty");
  Table t{{"alpha", "bx", "bz", "tangle", "degenerate"}, {}};
  for (double a : alphas) {
    const auto p = to_physical(DimensionlessParams::from_alpha(big_d, big_w, a), 1.0, 1.0);
    const bool degenerate = saddle_points(p).degenerate;
    const auto b = degenerate ? massive_bloch_symmetric_mixture(p) : massive_bloch(p);
    t.rows.push_back({a, b.b_x(), b.b_z(), tangle(b).value, degenerate});
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground state of a qubit coupled to an oscillator, adiabatic scheme",
               "adiabatic-cli"};
  app.set_config("--config", "", "TOML file with option values (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<double> big_d{10.0};
  std::vector<double> big_w{0.0};
  std::vector<double> alpha;
  std::size_t n_points = kDefaultGridPoints;
  double q_max = 0.0;
  std::size_t n_boson = 0;
  std::string out_path;
  std::string format;
  unsigned threads = 0;

  app.add_option("--big-d", big_d, "D = 2 Delta / omega (comma list)")
      ->delimiter(',')->capture_default_str();
  app.add_option("--big-w", big_w, "W = 2 epsilon / omega (comma list)")
      ->delimiter(',')->capture_default_str();
  auto* alpha_opt = app.add_option("--alpha", alpha, "alpha = L^2 / (2D) (comma list)")
      ->delimiter(',');
  app.add_option("--n-points", n_points, "grid points")->capture_default_str();
  auto* q_max_opt = app.add_option("--q-max", q_max, "symmetric grid half-width (default: automatic)");
  auto* n_boson_opt = app.add_option("--n-boson", n_boson, "Fock states per qubit level (default: automatic)");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", threads, "sweep workers (0: all cores)")->capture_default_str();

  auto* potential = app.add_subcommand("potential", "U_lower and U_upper along Q");
  auto* wavefunction = app.add_subcommand("wavefunction", "ground-state phi0(Q)");
  auto* sweep = app.add_subcommand("sweep", "Bloch vector, tangle and E0 over a parameter grid");
  auto* compare = app.add_subcommand("compare-exact", "adiabatic versus truncated-Fock exact tangle");
  auto* massive = app.add_subcommand("massive", "D -> infinity closed forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InvalidArguments);
  }

  try {
    if (alpha_opt->count() == 0 && alpha.empty()) throw InvalidArgument("--alpha is required");
    require_finite(alpha, "alpha");
    require_finite(big_d, "D");
    require_finite(big_w, "W");
    SolverOptions solver;
    solver.n_points = n_points;
    if (q_max_opt->count() > 0) solver.q_max = q_max;
    validate_solver(solver);
    std::optional<std::size_t> boson;
    if (n_boson_opt->count() > 0) boson = n_boson;
    const OutputFormat fmt = format.empty()
        ? (compare->parsed() ? OutputFormat::Json : OutputFormat::Csv)
        : (format == "csv" ? OutputFormat::Csv : OutputFormat::Json);

    auto single_params = [&] {
      return DimensionlessParams::from_alpha(single(big_d, "big-d"), single(big_w, "big-w"),
                                             single(alpha, "alpha"));
    };

    std::string text;
    if (potential->parsed()) {
      const auto dp = single_params();
      const double half = solver.q_max ? *solver.q_max : auto_grid(dp, n_points).q_max;
      text = render(potential_table(dp, Grid::symmetric(half, n_points)), fmt);
    } else if (wavefunction->parsed()) {
      text = render(wavefunction_table(solve(single_params(), solver)), fmt);
    } else if (sweep->parsed()) {
      SweepSpec spec{alpha, big_d, big_w, solver, out_path, fmt};
      const Table t = sweep_table(spec, threads);
      if (fmt == OutputFormat::Csv) {
        text = to_csv(t);
      } else {
        text = nlohmann::json{{"spec", spec}, {"rows", to_json_rows(t)}}.dump(2) + "\n";
      }
    } else if (compare->parsed()) {
      auto c = compare_exact(single_params(), boson, solver);
      c.alpha = alpha.front();
      text = fmt == OutputFormat::Json ? to_json(c).dump(2) + "\n" : to_csv(to_table(c));
    } else if (massive->parsed()) {
      const double d = single(big_d, "big-d");
      if (!(d > 0.0)) throw InvalidArgument("--big-d must be positive");
      text = render(massive_table(alpha, single(big_w, "big-w"), d), fmt);
    }
    write_output(out_path, text, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::InvalidArguments);
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::NumericalFailure);
  }
  return static_cast<int>(ExitCode::Ok);
}

}  // namespace adiabatic::cli
