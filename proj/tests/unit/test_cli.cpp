#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace adiabatic;
using namespace adiabatic::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "adiabatic-cli");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("adiabatic_cli_test_" + name);
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(-5.0) == "-5.000000000000e+00");
  CHECK(format_number(0.0) == "0.000000000000e+00");
  CHECK(format_number(-0.0) == "0.000000000000e+00");
  CHECK(format_number(1.0 / 3.0) == "3.333333333333e-01");
}

TEST_CASE("potential") {
  const auto r = invoke({"potential", "--alpha", "2", "--q-max", std::to_string(std::sqrt(30.0) / 2.0),
                         "--n-points", "3"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"Q", "U_lower", "U_upper"});
  CHECK(rows[2][0] == "0.000000000000e+00");
  CHECK(rows[2][1] == "-5.000000000000e+00");
  CHECK(rows[2][2] == "5.000000000000e+00");
  CHECK(std::stod(rows[3][1]) == doctest::Approx(-6.25).epsilon(1e-9));

  SUBCASE("biased curve has two unequal minima") {
    const auto t = potential_table(DimensionlessParams::from_alpha(10.0, 1.0, 2.0), Grid::symmetric(8.0, 1601));
    std::vector<double> minima;
    for (std::size_t i = 1; i + 1 < t.rows.size(); ++i) {
      const double u = std::get<double>(t.rows[i][1]);
      if (u < std::get<double>(t.rows[i - 1][1]) && u < std::get<double>(t.rows[i + 1][1])) minima.push_back(u);
    }
    REQUIRE(minima.size() == 2);
    CHECK(std::abs(minima[0] - minima[1]) > 0.5);
  }
}

TEST_CASE("wavefunction") {
  SUBCASE("uncoupled ground state is the unit-width Gaussian") {
    const auto r = invoke({"wavefunction", "--alpha", "0"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows[0] == std::vector<std::string>{"Q", "phi0"});
    REQUIRE(rows.size() == kDefaultGridPoints + 1);
    double worst = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double q = std::stod(rows[i][0]);
      const double expected = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * q * q);
      worst = std::max(worst, std::abs(std::stod(rows[i][1]) - expected));
    }
    CHECK(worst < 1e-5);
  }
  SUBCASE("symmetric and localized profiles") {
    const auto sym = solve(DimensionlessParams::from_alpha(10.0, 0.0, 2.0), {});
    const auto t = wavefunction_table(sym);
    const std::size_t n = t.rows.size();
    const std::size_t mid = n / 2;
    // Bimodal: the centre is a local minimum.
    CHECK(std::get<double>(t.rows[mid][1]) < std::get<double>(t.rows[mid + 200][1]));
    CHECK(std::get<double>(t.rows[10][1]) == std::get<double>(t.rows[n - 11][1]));
    const auto loc = half_line_mass(solve(DimensionlessParams::from_alpha(10.0, 0.1, 2.0), {}));
    CHECK(std::max(loc.negative, loc.positive) >= 0.95);
  }
}

TEST_CASE("sweep") {
  SweepSpec spec;
  spec.alpha = {0.0, 1.0, 2.0};
  spec.big_d = {5.0, 10.0};
  spec.big_w = {0.0, 0.1};
  SUBCASE("grid order and header") {
    const auto t = sweep_table(spec, 4);
    CHECK(t.header == std::vector<std::string>{"alpha", "D", "W", "bx", "bz", "tangle", "E0"});
    REQUIRE(t.rows.size() == 12);
    std::size_t i = 0;
    for (double d : spec.big_d) {
      for (double w : spec.big_w) {
        for (double a : spec.alpha) {
          CHECK(std::get<double>(t.rows[i][0]) == a);
          CHECK(std::get<double>(t.rows[i][1]) == d);
          CHECK(std::get<double>(t.rows[i][2]) == w);
          ++i;
        }
      }
    }
  }
  SUBCASE("thread count does not change the output") {
    CHECK(to_csv(sweep_table(spec, 1)) == to_csv(sweep_table(spec, 8)));
  }
  SUBCASE("failed points become error rows and the run continues") {
    const auto t = sweep_table(spec, 3, [](const DimensionlessParams& dp, const SolverOptions& o) {
      if (dp.big_w() != 0.0 && dp.big_d() == 5.0) throw ConvergenceError("injected");
      return evaluate_point(dp, o);
    });
    const auto rows = parse_csv(to_csv(t));
    REQUIRE(rows.size() == 13);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const bool failed = i >= 4 && i <= 6;
      CHECK((rows[i][3] == "error") == failed);
      CHECK((rows[i][6] == "error") == failed);
    }
  }
  SUBCASE("tangle rises with alpha at W = 0 over [0, 6]") {
    SweepSpec s;
    for (int k = 0; k <= 24; ++k) s.alpha.push_back(0.25 * k);
    const auto t = sweep_table(s);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      CHECK(std::get<double>(t.rows[i][5]) > std::get<double>(t.rows[i - 1][5]));
    }
  }
  SUBCASE("invalid specs") {
    SweepSpec bad = spec;
    bad.alpha = {};
    CHECK_THROWS_AS(sweep_table(bad), InvalidArgument);
    bad = spec;
    bad.alpha = {-0.5};
    CHECK_THROWS_AS(sweep_table(bad), InvalidArgument);
    bad = spec;
    bad.big_d = {0.0};
    CHECK_THROWS_AS(sweep_table(bad), InvalidArgument);
  }
}

TEST_CASE("sweep spec JSON round trip") {
  SweepSpec spec;
  spec.alpha = {0.1, 0.30000000000000004, 6.0};
  spec.big_d = {10.0};
  spec.big_w = {-0.1, 1e-17};
  spec.solver.q_max = 12.5;
  spec.solver.n_points = 4001;
  spec.output = "out.json";
  spec.format = OutputFormat::Json;
  const std::string text = nlohmann::json(spec).dump();
  const auto back = nlohmann::json::parse(text).get<SweepSpec>();
  CHECK(back == spec);
  CHECK(nlohmann::json(back).dump() == text);
  CHECK_THROWS(nlohmann::json::parse(R"({"alpha":[1],"D":[1],"W":[0],"solver":{"n_points":3,"q_max":null},"output":"","format":"xml"})").get<SweepSpec>());
}

TEST_CASE("compare-exact") {
  auto record = [](const std::vector<std::string>& extra) {
    std::vector<std::string> args{"compare-exact"};
    args.insert(args.end(), extra.begin(), extra.end());
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
  };
  SUBCASE("uncoupled: both tangles vanish") {
    const auto j = record({"--alpha", "0"});
    CHECK(j["delta"].get<double>() == 0.0);
    CHECK(j["tau_adiabatic"].get<double>() == 0.0);
    CHECK(j["tau_exact"].get<double>() == 0.0);
    CHECK(j["E0_exact"].get<double>() == doctest::Approx(-4.5).epsilon(1e-12));
  }
  SUBCASE("discrepancy shrinks from D = 10 to D = 40") {
    const auto d10 = record({"--alpha", "2", "--big-d", "10"});
    const auto d40 = record({"--alpha", "2", "--big-d", "40"});
    CHECK(std::abs(d40["delta"].get<double>()) < std::abs(d10["delta"].get<double>()));
    CHECK(d10["alpha"].get<double>() == 2.0);
    for (const char* key : {"tau_adiabatic", "tau_exact", "delta", "E0_adiabatic", "E0_exact"}) {
      CHECK(d10.contains(key));
    }
  }
  SUBCASE("bias suppresses both tangles below the symmetric massive value") {
    const auto j = record({"--alpha", "2", "--big-w", "0.1"});
    CHECK(j["tau_adiabatic"].get<double>() < 0.75);
    CHECK(j["tau_exact"].get<double>() < 0.75);
  }
  SUBCASE("inadequate truncation is reported") {
    const auto r = invoke({"compare-exact", "--alpha", "2", "--n-boson", "20"});
    CHECK(r.code == 3);
    CHECK(r.err.find("n_boson") != std::string::npos);
  }
}

TEST_CASE("massive") {
  const auto r = invoke({"massive", "--alpha", "0.5,2"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "bx", "bz", "tangle", "degenerate"});
  CHECK(std::stod(rows[1][3]) == 0.0);
  CHECK(rows[1][4] == "false");
  CHECK(std::stod(rows[2][3]) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rows[2][4] == "true");
  const auto biased = parse_csv(invoke({"massive", "--alpha", "2", "--big-w", "1"}).out);
  CHECK(std::abs(std::stod(biased[1][3])) < 1e-12);
  CHECK(biased[1][4] == "false");
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"potential"}).code == 2);
  CHECK(invoke({"potential", "--alpha", "1,2"}).code == 2);
  CHECK(invoke({"potential", "--alpha", "-1"}).code == 2);
  CHECK(invoke({"potential", "--alpha", "abc"}).code == 2);
  CHECK(invoke({"sweep", "--alpha", "1", "--big-d", "0"}).code == 2);
  CHECK(invoke({"sweep", "--alpha", "1", "--n-points", "2"}).code == 2);
  CHECK(invoke({"sweep", "--alpha", "1", "--q-max", "-3"}).code == 2);
  CHECK(invoke({"sweep", "--alpha", "1", "--format", "xml"}).code == 2);
  CHECK(invoke({"massive", "--alpha", "1", "--big-d", "-2"}).code == 2);
  CHECK(invoke({"wavefunction", "--alpha", "1", "--out", "/nonexistent/dir/x.csv"}).code == 2);
  const auto bad = invoke({"sweep", "--alpha", "-1"});
  CHECK(!bad.err.empty());
}

TEST_CASE("output file, formats and determinism") {
  const auto path = scratch("sweep.csv");
  std::filesystem::remove(path);
  const std::vector<std::string> args{"sweep", "--alpha", "0.5,1.5", "--big-w", "0,0.2", "--out", path.string()};
  REQUIRE(invoke(args).code == 0);
  std::ifstream first(path);
  const std::string a((std::istreambuf_iterator<char>(first)), {});
  REQUIRE(invoke(args).code == 0);
  std::ifstream second(path);
  const std::string b((std::istreambuf_iterator<char>(second)), {});
  CHECK(!a.empty());
  CHECK(a == b);
  CHECK(a.rfind("alpha,D,W,bx,bz,tangle,E0\n", 0) == 0);
  std::filesystem::remove(path);

  const auto json = invoke({"sweep", "--alpha", "0.5,1.5", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["rows"].size() == 2);
  CHECK(j["spec"].get<SweepSpec>().alpha == std::vector<double>{0.5, 1.5});
}

TEST_CASE("TOML config with flag precedence") {
  const auto path = scratch("config.toml");
  {
    std::ofstream f(path);
    f << "alpha = [1.5, 2.5]\nbig-d = [20.0]\nbig-w = [0.1]\n";
  }
  const auto from_file = parse_csv(invoke({"sweep", "--config", path.string()}).out);
  REQUIRE(from_file.size() == 3);
  CHECK(std::stod(from_file[1][0]) == 1.5);
  CHECK(std::stod(from_file[1][1]) == 20.0);
  CHECK(std::stod(from_file[1][2]) == doctest::Approx(0.1));
  const auto overridden = parse_csv(invoke({"sweep", "--config", path.string(), "--big-d", "10"}).out);
  REQUIRE(overridden.size() == 3);
  CHECK(std::stod(overridden[1][1]) == 10.0);
  CHECK(std::stod(overridden[1][2]) == doctest::Approx(0.1));
  CHECK(invoke({"sweep", "--config", scratch("missing.toml").string()}).code == 2);
  std::filesystem::remove(path);
}
