// Command-line driver: solve | verify | converge | near-field.
#include "oblique/errors.hpp"
#include "oblique/workflows.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Overrides {
  std::string config;
  std::string output;
  std::optional<int> n;
  std::optional<double> theta;
  std::optional<double> phi;
  std::vector<int> n_list;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "JSON config file (defaults when omitted)")
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", o.output, "output directory");
  cmd->add_option("-n,--n", o.n, "half number of quadrature nodes");
  cmd->add_option("--theta", o.theta, "incidence angle to the cylinder axis (rad)");
  cmd->add_option("--phi", o.phi, "polar angle of the incidence direction (rad)");
}

oblique::RunConfig build_config(const Overrides& o, std::optional<oblique::Workflow> force) {
  oblique::RunConfig cfg =
      o.config.empty() ? oblique::parse_config(nlohmann::json::object()) : oblique::load_config(o.config);
  if (force) cfg.workflow = *force;
  if (!o.output.empty()) cfg.output_dir = o.output;
  if (o.n) cfg.n = *o.n;
  if (o.theta) cfg.physics.theta = *o.theta;
  if (o.phi) cfg.physics.phi = *o.phi;
  if (!o.n_list.empty()) cfg.n_list = o.n_list;
  return cfg;
}

void report_error(const std::exception& e, const std::string& dir) {
  const auto doc = oblique::error_json(e);
  std::cerr << doc.dump() << '\n';
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  std::ofstream out(std::filesystem::path(dir) / "error.json");
  out << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oblique-incidence scattering by a dielectric cylinder (boundary integral solver)"};
  app.set_version_flag("--version", std::string(oblique::kVersion));
  app.require_subcommand(1);

  Overrides o;
  auto* solve = app.add_subcommand("solve", "plane-wave scattering: far field, optional grids");
  auto* verify = app.add_subcommand("verify", "manufactured-solution error table");
  auto* converge = app.add_subcommand("converge", "manufactured errors over a list of n");
  auto* near = app.add_subcommand("near-field", "near-field grids of u and v");
  for (auto* cmd : {solve, verify, converge, near}) add_common(cmd, o);
  converge->add_option("--n-list", o.n_list, "values of n, e.g. --n-list 8 16 32 64");

  CLI11_PARSE(app, argc, argv);

  std::string out_dir = o.output;
  try {
    oblique::RunResult result;
    if (solve->parsed()) {
      auto cfg = build_config(o, oblique::Workflow::PlaneWave);
      out_dir = cfg.output_dir;
      result = oblique::run_solve(cfg);
    } else if (verify->parsed()) {
      auto cfg = build_config(o, oblique::Workflow::Manufactured);
      out_dir = cfg.output_dir;
      result = oblique::run_verify(cfg);
    } else if (converge->parsed()) {
      auto cfg = build_config(o, oblique::Workflow::Manufactured);
      out_dir = cfg.output_dir;
      result = oblique::run_convergence(cfg);
    } else {
      auto cfg = build_config(o, std::nullopt);
      out_dir = cfg.output_dir;
      result = oblique::run_near_field(cfg);
    }
    for (const auto& f : result.files) std::cout << f << '\n';
    return 0;
  } catch (const std::exception& e) {
    report_error(e, out_dir);
    return oblique::exit_code_for(e);
  }
}
