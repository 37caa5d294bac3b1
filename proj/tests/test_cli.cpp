#include "oblique/errors.hpp"
#include "oblique/workflows.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace oblique;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "oblique_test_cli" / name;
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunConfig defaults() { return parse_config(nlohmann::json::object()); }

}  // namespace

TEST_CASE("defaults reproduce the kite experiment") {
  const RunConfig c = defaults();
  CHECK(c.workflow == Workflow::PlaneWave);
  CHECK(c.curve.preset == "kite");
  CHECK(c.physics.epsilon1 == 3.0);
  CHECK(c.physics.mu1 == 2.0);
  CHECK(c.physics.theta == doctest::Approx(pi / 3));
  CHECK(c.physics.phi == doctest::Approx(pi / 2));
  CHECK(c.n == 32);
  CHECK(c.directions == 64);
  CHECK_FALSE(c.grid.has_value());
  CHECK(c.probes.size() >= 10);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("default probes are at least 0.5 from the kite") {
  const BoundaryPolygon poly(kite_curve(), 4096);
  int interior = 0;
  for (const Vec2& p : default_probes()) {
    CHECK(poly.nearest(p).distance >= 0.5);
    interior += poly.inside(p);
  }
  CHECK(interior >= 3);
}

TEST_CASE("config parsing and echo round trip") {
  const auto j = nlohmann::json::parse(R"({
    "format_version": 1,
    "workflow": "manufactured",
    "curve": {"preset": "ellipse", "semi_axes": [2.0, 1.0], "center": [0.1, 0.0]},
    "physics": {"epsilon1": 4.0, "theta": 1.2},
    "n": 24,
    "n_list": [8, 16],
    "directions": 32,
    "grid": {"m": 4, "half_extent": 3.0},
    "sources": {"z1": [0.2, 0.1], "z2": [-0.3, 0.0], "z3": [3.0, 0.0], "z4": [0.0, -2.0]},
    "probes": [[5, 5]],
    "options": {"preconditioned": true, "exclusion_factor": 2.0, "total_field": true},
    "output_dir": "x"
  })");
  const RunConfig c = parse_config(j);
  CHECK(c.workflow == Workflow::Manufactured);
  CHECK(c.curve.preset == "ellipse");
  CHECK(c.curve.semi_x == 2.0);
  CHECK(c.physics.epsilon1 == 4.0);
  CHECK(c.physics.mu1 == 2.0);
  CHECK(c.n == 24);
  CHECK(c.grid->nx == 8);
  CHECK(c.grid->x_max == 3.0);
  CHECK(c.preconditioned);
  CHECK(c.probes.size() == 1);
  CHECK_NOTHROW(c.validate());
  const RunConfig again = parse_config(to_json(c));
  CHECK(to_json(again) == to_json(c));
}

TEST_CASE("custom curve coefficients") {
  const auto j = nlohmann::json::parse(R"({
    "curve": {"x": {"offset": -1, "terms": [{"k": 1, "cos": 2}, {"k": 2, "cos": 1.5}]},
              "y": {"terms": [{"k": 1, "sin": 2.5}]}}
  })");
  const RunConfig c = parse_config(j);
  CHECK(c.curve.preset == "custom");
  const TrigCurve built = c.curve.build();
  CHECK((built.derivative(0.3, 0) - kite_curve().derivative(0.3, 0)).norm() < 1e-15);
}

TEST_CASE("config errors") {
  using nlohmann::json;
  CHECK_THROWS_AS(parse_config(json::parse(R"({"bogus": 1})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"format_version": 2})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"workflow": "x"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n": "many"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"physics": {"eps": 1}})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"curve": {"preset": "custom"}})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse("[]")), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);

  const fs::path dir = scratch("bad_json");
  fs::create_directories(dir);
  std::ofstream(dir / "c.json") << "{ not json";
  CHECK_THROWS_AS(load_config((dir / "c.json").string()), ConfigError);

  RunConfig c = defaults();
  c.n = 2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = defaults();
  c.physics.theta = 0.0;
  CHECK_THROWS_AS(c.validate(), AdmissibilityError);
  c = defaults();
  c.curve.preset = "square";
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = defaults();
  c.workflow = Workflow::Manufactured;
  c.sources.z1 = Vec2(10.0, 0.0);
  CHECK_THROWS_AS(c.validate(), PlacementError);
}

TEST_CASE("solve writes far field and grids with fixed columns") {
  RunConfig c = defaults();
  c.output_dir = scratch("solve").string();
  c.n = 16;
  c.directions = 8;
  c.grid = GridSpec::square(4);
  const RunResult r = run_solve(c);
  REQUIRE(r.files.size() == 3);
  std::ifstream ff(r.files[0]);
  std::string header, line;
  std::getline(ff, header);
  CHECK(header == "angle_rad,re_u,im_u,abs_u,re_v,im_v,abs_v");
  int rows = 0;
  while (std::getline(ff, line)) ++rows;
  CHECK(rows == 8);
  std::ifstream grid(r.files[1]);
  std::getline(grid, header);
  CHECK(header == "x,y,region,re,im,abs");
  rows = 0;
  while (std::getline(grid, line)) ++rows;
  CHECK(rows == 64);
  CHECK(fs::exists(fs::path(c.output_dir) / "summary.json"));
  CHECK(r.summary["version"] == kVersion);
  CHECK(r.summary["solve"]["linear_relative_residual"].get<double>() <= 1e-10);
  CHECK(r.summary.contains("timings"));
  CHECK(r.summary["config"]["n"] == 16);
}

TEST_CASE("verify: errors shrink from n = 32 to n = 64") {
  RunConfig c = defaults();
  c.workflow = Workflow::Manufactured;
  c.output_dir = scratch("verify32").string();
  const RunResult a = run_verify(c);
  c.n = 64;
  c.output_dir = scratch("verify64").string();
  const RunResult b = run_verify(c);
  const double ea = a.summary["far_field_error"]["max_u"].get<double>();
  const double eb = b.summary["far_field_error"]["max_u"].get<double>();
  CHECK(std::isfinite(ea));
  CHECK(eb < ea);
  CHECK(b.summary["far_field_error"]["max_v"].get<double>() <
        a.summary["far_field_error"]["max_v"].get<double>());
  CHECK(b.summary["probe_error"]["evaluated"].get<int>() >= 10);
  CHECK(fs::exists(fs::path(c.output_dir) / "far_field_errors.csv"));
  CHECK(fs::exists(fs::path(c.output_dir) / "probe_errors.csv"));

  RunConfig wrong = defaults();
  CHECK_THROWS_AS(run_verify(wrong), ConfigError);
}

TEST_CASE("verify: normal incidence compared with theta = pi/3 (soft)") {
  RunConfig c = defaults();
  c.workflow = Workflow::Manufactured;
  c.output_dir = scratch("soft_a").string();
  const double oblique = run_verify(c).summary["far_field_error"]["max_u"].get<double>();
  c.physics.theta = pi / 2 - 0.01;
  c.output_dir = scratch("soft_b").string();
  const double normal = run_verify(c).summary["far_field_error"]["max_u"].get<double>();
  MESSAGE("max |u_inf error| at n = 32: theta = pi/3 -> " << oblique << ", theta ~ pi/2 -> " << normal);
  WARN(normal < oblique);
}

TEST_CASE("convergence study") {
  RunConfig c = defaults();
  c.workflow = Workflow::Manufactured;
  c.n_list = {8, 16, 32, 64};
  c.output_dir = scratch("converge").string();
  const RunResult r = run_convergence(c);
  CHECK(r.summary["monotone_decay"] == true);
  CHECK(r.summary["runs"].size() == 4);
  for (const auto& row : r.summary["runs"]) CHECK(row["condition_estimate"].get<double>() > 1.0);

  // A single-entry list reproduces verify.
  c.n_list = {32};
  c.output_dir = scratch("converge_single").string();
  const RunResult single = run_convergence(c);
  c.output_dir = scratch("verify_single").string();
  const RunResult v = run_verify(c);
  CHECK(single.summary["runs"][0]["max_err_u"] == v.summary["far_field_error"]["max_u"]);
  CHECK(single.summary["runs"][0]["max_err_v"] == v.summary["far_field_error"]["max_v"]);
}

TEST_CASE("identical configs give byte-identical CSV") {
  RunConfig c = defaults();
  c.n = 16;
  c.grid = GridSpec::square(6);
  c.output_dir = scratch("det_a").string();
  const RunResult a = run_solve(c);
  c.output_dir = scratch("det_b").string();
  const RunResult b = run_solve(c);
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t k = 0; k < a.files.size(); ++k) CHECK(slurp(a.files[k]) == slurp(b.files[k]));
}

TEST_CASE("near-field workflow labels every grid point") {
  RunConfig c = defaults();
  c.workflow = Workflow::Manufactured;
  c.n = 16;
  c.grid = GridSpec::square(5);
  c.output_dir = scratch("near").string();
  const RunResult r = run_near_field(c);
  const auto& g = r.summary["grid"];
  CHECK(g["interior"].get<int>() + g["exterior"].get<int>() + g["excluded"].get<int>() == 100);
}

TEST_CASE("error documents and exit codes") {
  CHECK(exit_code_for(ConfigError("x")) == 2);
  CHECK(exit_code_for(PlacementError("x")) == 2);
  CHECK(exit_code_for(AdmissibilityError("x")) == 3);
  CHECK(exit_code_for(ResonanceError("x", 1e14)) == 4);
  CHECK(exit_code_for(IoError("x")) == 5);
  CHECK(exit_code_for(std::runtime_error("x")) == 1);
  const auto j = error_json(ResonanceError("singular", 3e14));
  CHECK(j["error"] == "resonance");
  CHECK(j["condition_estimate"] == 3e14);
  CHECK(j["exit_code"] == 4);

  // Output directory below a regular file cannot be created.
  const fs::path dir = scratch("io");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  RunConfig c = defaults();
  c.n = 8;
  c.output_dir = (dir / "file" / "sub").string();
  CHECK_THROWS_AS(run_solve(c), IoError);
}

TEST_CASE("command-line tool exit codes") {
  const fs::path dir = scratch("exe");
  const std::string exe = OBLIQUE_CLI_PATH;
  const std::string out = " -o " + (dir / "run").string() + " > /dev/null 2>&1";
  auto status = [](const std::string& cmd) {
    const int s = std::system(cmd.c_str());
    return WEXITSTATUS(s);
  };
  CHECK(status(exe + " solve -n 8" + out) == 0);
  CHECK(fs::exists(dir / "run" / "far_field.csv"));
  CHECK(status(exe + " solve --theta 0" + out) == 3);
  CHECK(fs::exists(dir / "run" / "error.json"));
  CHECK(status(exe + " solve -n 2" + out) == 2);

  fs::create_directories(dir);
  std::ofstream(dir / "res.json")
      << R"({"curve": {"preset": "circle"}, "physics": {"theta": 1.5707963267948966, "epsilon1": 5.783185962946784, "mu1": 1.0}})";
  CHECK(status(exe + " solve -c " + (dir / "res.json").string() + out) == 4);
  std::ofstream(dir / "blocker") << "x";
  CHECK(status(exe + " solve -n 8 -o " + (dir / "blocker" / "sub").string() + " > /dev/null 2>&1") == 5);
}
