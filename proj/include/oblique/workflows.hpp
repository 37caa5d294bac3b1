#pragma once

#include "oblique/config.hpp"

#include <exception>
#include <string>
#include <vector>

namespace oblique {

/// Files written by a workflow and the summary that was saved alongside them.
struct RunResult {
  std::vector<std::string> files;
  nlohmann::json summary;
};

/// Plane-wave scattering: far_field.csv, optional near_field_{u,v}.csv, summary.json.
RunResult run_solve(const RunConfig& cfg);

/// Manufactured problem at cfg.n: far_field.csv, far_field_errors.csv,
/// probe_errors.csv, summary.json.
RunResult run_verify(const RunConfig& cfg);

/// One manufactured solve per entry of cfg.n_list: convergence.csv, summary.json.
RunResult run_convergence(const RunConfig& cfg);

/// Field grids for the configured workflow (square grid m = 128 when no grid is set).
RunResult run_near_field(const RunConfig& cfg);

/// Error document written as error.json and echoed on stderr by the CLI.
nlohmann::json error_json(const std::exception& e);
int exit_code_for(const std::exception& e);

/// CSV writers; every float uses 17 significant digits.
void write_far_field_csv(const std::string& path, const FarFieldPattern& ff);
void write_grid_csv(const std::string& path, const FieldGrid& grid, bool v_component);

}  // namespace oblique
