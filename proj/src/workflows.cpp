#include "oblique/workflows.hpp"

#include "oblique/errors.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

namespace oblique {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_output(const std::string& path) {
  File f(std::fopen(path.c_str(), "w"));
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish(File& f, const std::string& path) {
  if (std::ferror(f.get()) || std::fclose(f.release()) != 0)
    throw IoError("write to '" + path + "' failed");
}

std::string prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return dir;
}

std::string join(const std::string& dir, const char* name) {
  return (std::filesystem::path(dir) / name).string();
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

PhysicsConfig checked_physics(const RunConfig& cfg) {
  cfg.validate();
  return derive(cfg.physics);
}

SystemForm form_of(const RunConfig& cfg) {
  return cfg.preconditioned ? SystemForm::Preconditioned : SystemForm::Compact;
}

json base_summary(const RunConfig& cfg, const char* command) {
  return {{"version", kVersion}, {"command", command}, {"config", to_json(cfg)}};
}

json solve_report(const Solution& s, const RhsMode& mode) {
  const auto res = transmission_residuals(s.assembly, s.traces, mode);
  auto sup = [](const VectorC& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; };
  return {{"n", s.assembly.nodes->n()},
          {"system_condition_estimate", s.solution.condition_estimate},
          {"ns_condition_estimate", {s.assembly.comp[0].condition, s.assembly.comp[1].condition}},
          {"linear_relative_residual", s.solution.relative_residual},
          {"transmission_residuals",
           {{"dirichlet_u", sup(res.dirichlet_u)},
            {"mixed_v", sup(res.mixed_v)},
            {"dirichlet_v", sup(res.dirichlet_v)},
            {"mixed_u", sup(res.mixed_u)}}}};
}

struct FarFieldErrors {
  std::vector<double> u, v;
  double max_u = 0.0, max_v = 0.0, mean_u = 0.0, mean_v = 0.0;
};

FarFieldErrors far_field_errors(const PhysicsConfig& phys, const SourcePoints& pts,
                                const FarFieldPattern& ff) {
  FarFieldErrors e;
  for (std::size_t k = 0; k < ff.angles.size(); ++k) {
    const Vec2 d = ff.direction(k);
    e.u.push_back(std::abs(ff.u_inf[k] - exact_far_field(phys, pts.z1, d)));
    e.v.push_back(std::abs(ff.v_inf[k] - exact_far_field(phys, pts.z2, d)));
    e.max_u = std::max(e.max_u, e.u.back());
    e.max_v = std::max(e.max_v, e.v.back());
    e.mean_u += e.u.back();
    e.mean_v += e.v.back();
  }
  if (!e.u.empty()) {
    e.mean_u /= e.u.size();
    e.mean_v /= e.v.size();
  }
  return e;
}

}  // namespace

void write_far_field_csv(const std::string& path, const FarFieldPattern& ff) {
  File f = open_output(path);
  std::fprintf(f.get(), "angle_rad,re_u,im_u,abs_u,re_v,im_v,abs_v\n");
  for (std::size_t k = 0; k < ff.angles.size(); ++k) {
    const cplx u = ff.u_inf[k], v = ff.v_inf[k];
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", ff.angles[k], u.real(),
                 u.imag(), std::abs(u), v.real(), v.imag(), std::abs(v));
  }
  finish(f, path);
}

void write_grid_csv(const std::string& path, const FieldGrid& grid, bool v_component) {
  File f = open_output(path);
  std::fprintf(f.get(), "x,y,region,re,im,abs\n");
  const auto& values = v_component ? grid.v : grid.u;
  for (int j = 0; j < grid.spec.ny; ++j) {
    for (int i = 0; i < grid.spec.nx; ++i) {
      const std::size_t k = grid.index(i, j);
      const cplx z = values[k];
      std::fprintf(f.get(), "%.17g,%.17g,%s,%.17g,%.17g,%.17g\n", grid.spec.x(i), grid.spec.y(j),
                   to_string(grid.region[k]), z.real(), z.imag(), std::abs(z));
    }
  }
  finish(f, path);
}

RunResult run_solve(const RunConfig& cfg) {
  const PhysicsConfig phys = checked_physics(cfg);
  const std::string dir = prepare_dir(cfg.output_dir);
  const TrigCurve curve = cfg.curve.build();
  const RhsMode mode = PlaneWaveRhs{};

  RunResult r;
  r.summary = base_summary(cfg, "solve");
  json timings;
  auto t0 = Clock::now();
  const Solution s = solve_problem(phys, curve, cfg.n, mode, form_of(cfg));
  timings["solve_s"] = seconds_since(t0);
  r.summary["solve"] = solve_report(s, mode);

  t0 = Clock::now();
  const FarFieldPattern ff =
      far_field(phys, *s.assembly.nodes, s.traces, equispaced_angles(cfg.directions));
  timings["far_field_s"] = seconds_since(t0);
  r.files.push_back(join(dir, "far_field.csv"));
  write_far_field_csv(r.files.back(), ff);

  if (cfg.grid) {
    t0 = Clock::now();
    NearFieldOptions opts;
    opts.exclusion_factor = cfg.exclusion_factor;
    opts.total_field = cfg.total_field;
    const FieldGrid g = near_field(phys, *s.assembly.nodes, s.traces, *cfg.grid, opts);
    timings["near_field_s"] = seconds_since(t0);
    r.files.push_back(join(dir, "near_field_u.csv"));
    write_grid_csv(r.files.back(), g, false);
    r.files.push_back(join(dir, "near_field_v.csv"));
    write_grid_csv(r.files.back(), g, true);
  }
  r.summary["timings"] = timings;
  r.summary["files"] = r.files;
  write_json(join(dir, "summary.json"), r.summary);
  return r;
}

RunResult run_verify(const RunConfig& cfg) {
  if (cfg.workflow != Workflow::Manufactured)
    throw ConfigError("verify requires workflow 'manufactured'");
  const PhysicsConfig phys = checked_physics(cfg);
  const std::string dir = prepare_dir(cfg.output_dir);
  const TrigCurve curve = cfg.curve.build();
  const RhsMode mode = cfg.sources;

  RunResult r;
  r.summary = base_summary(cfg, "verify");
  json timings;
  auto t0 = Clock::now();
  const Solution s = solve_problem(phys, curve, cfg.n, mode, form_of(cfg));
  timings["solve_s"] = seconds_since(t0);
  r.summary["solve"] = solve_report(s, mode);

  t0 = Clock::now();
  const FarFieldPattern ff =
      far_field(phys, *s.assembly.nodes, s.traces, equispaced_angles(cfg.directions));
  const FarFieldErrors fe = far_field_errors(phys, cfg.sources, ff);
  r.files.push_back(join(dir, "far_field.csv"));
  write_far_field_csv(r.files.back(), ff);
  {
    r.files.push_back(join(dir, "far_field_errors.csv"));
    File f = open_output(r.files.back());
    std::fprintf(f.get(), "angle_rad,abs_err_u,abs_err_v\n");
    for (std::size_t k = 0; k < ff.angles.size(); ++k)
      std::fprintf(f.get(), "%.17g,%.17g,%.17g\n", ff.angles[k], fe.u[k], fe.v[k]);
    finish(f, r.files.back());
  }

  const BoundaryPolygon polygon(curve, 8 * cfg.n);
  double probe_max_u = 0.0, probe_max_v = 0.0;
  int evaluated = 0;
  {
    r.files.push_back(join(dir, "probe_errors.csv"));
    File f = open_output(r.files.back());
    std::fprintf(f.get(), "x,y,region,abs_err_u,abs_err_v\n");
    for (const Vec2& x : cfg.probes) {
      const Region reg = classify(polygon, curve, cfg.n, cfg.exclusion_factor, x);
      double eu = 0.0, ev = 0.0;
      if (reg != Region::Excluded) {
        const FieldPair got = near_field_at(phys, *s.assembly.nodes, s.traces, reg, x);
        const FieldPair want = reg == Region::Exterior
                                   ? exact_exterior_fields(phys, cfg.sources, x)
                                   : exact_interior_fields(phys, cfg.sources, x);
        eu = std::abs(got.u - want.u);
        ev = std::abs(got.v - want.v);
        probe_max_u = std::max(probe_max_u, eu);
        probe_max_v = std::max(probe_max_v, ev);
        ++evaluated;
      }
      std::fprintf(f.get(), "%.17g,%.17g,%s,%.17g,%.17g\n", x.x(), x.y(), to_string(reg), eu, ev);
    }
    finish(f, r.files.back());
  }
  timings["evaluation_s"] = seconds_since(t0);

  r.summary["far_field_error"] = {{"max_u", fe.max_u}, {"max_v", fe.max_v},
                                  {"mean_u", fe.mean_u}, {"mean_v", fe.mean_v}};
  r.summary["probe_error"] = {{"max_u", probe_max_u}, {"max_v", probe_max_v},
                              {"evaluated", evaluated},
                              {"excluded", static_cast<int>(cfg.probes.size()) - evaluated}};
  r.summary["timings"] = timings;
  r.summary["files"] = r.files;
  write_json(join(dir, "summary.json"), r.summary);
  return r;
}

RunResult run_convergence(const RunConfig& cfg) {
  if (cfg.workflow != Workflow::Manufactured)
    throw ConfigError("converge requires workflow 'manufactured'");
  const PhysicsConfig phys = checked_physics(cfg);
  const std::string dir = prepare_dir(cfg.output_dir);
  const TrigCurve curve = cfg.curve.build();
  const RhsMode mode = cfg.sources;
  const auto angles = equispaced_angles(cfg.directions);

  RunResult r;
  r.summary = base_summary(cfg, "converge");
  r.files.push_back(join(dir, "convergence.csv"));
  File f = open_output(r.files.back());
  std::fprintf(f.get(), "n,max_err_u,max_err_v,condition_estimate\n");
  json rows = json::array();
  double prev = -1.0;
  bool monotone = true;
  for (int n : cfg.n_list) {
    const auto t0 = Clock::now();
    const Solution s = solve_problem(phys, curve, n, mode, form_of(cfg));
    const FarFieldErrors fe =
        far_field_errors(phys, cfg.sources, far_field(phys, *s.assembly.nodes, s.traces, angles));
    const double err = std::max(fe.max_u, fe.max_v);
    if (prev >= 0.0 && !(err < prev)) monotone = false;
    prev = err;
    std::fprintf(f.get(), "%d,%.17g,%.17g,%.17g\n", n, fe.max_u, fe.max_v,
                 s.solution.condition_estimate);
    rows.push_back({{"n", n}, {"max_err_u", fe.max_u}, {"max_err_v", fe.max_v},
                    {"condition_estimate", s.solution.condition_estimate},
                    {"seconds", seconds_since(t0)}});
  }
  finish(f, r.files.back());
  r.summary["runs"] = rows;
  r.summary["monotone_decay"] = monotone;
  r.summary["files"] = r.files;
  write_json(join(dir, "summary.json"), r.summary);
  return r;
}

RunResult run_near_field(const RunConfig& cfg) {
  const PhysicsConfig phys = checked_physics(cfg);
  const std::string dir = prepare_dir(cfg.output_dir);
  const TrigCurve curve = cfg.curve.build();
  const bool manufactured = cfg.workflow == Workflow::Manufactured;
  const RhsMode mode = manufactured ? RhsMode(cfg.sources) : RhsMode(PlaneWaveRhs{});
  const GridSpec grid = cfg.grid.value_or(GridSpec::square(128));

  RunResult r;
  r.summary = base_summary(cfg, "near-field");
  json timings;
  auto t0 = Clock::now();
  const Solution s = solve_problem(phys, curve, cfg.n, mode, form_of(cfg));
  timings["solve_s"] = seconds_since(t0);
  r.summary["solve"] = solve_report(s, mode);

  t0 = Clock::now();
  NearFieldOptions opts;
  opts.exclusion_factor = cfg.exclusion_factor;
  opts.total_field = cfg.total_field && !manufactured;
  const FieldGrid g = near_field(phys, *s.assembly.nodes, s.traces, grid, opts);
  timings["near_field_s"] = seconds_since(t0);
  r.files.push_back(join(dir, "near_field_u.csv"));
  write_grid_csv(r.files.back(), g, false);
  r.files.push_back(join(dir, "near_field_v.csv"));
  write_grid_csv(r.files.back(), g, true);

  int counts[3] = {0, 0, 0};
  for (Region reg : g.region) ++counts[static_cast<int>(reg)];
  r.summary["grid"] = {{"nx", grid.nx}, {"ny", grid.ny}, {"dx", grid.dx()}, {"dy", grid.dy()},
                       {"interior", counts[0]}, {"exterior", counts[1]}, {"excluded", counts[2]}};
  r.summary["timings"] = timings;
  r.summary["files"] = r.files;
  write_json(join(dir, "summary.json"), r.summary);
  return r;
}

int exit_code_for(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) return err->exit_code();
  return 1;
}

json error_json(const std::exception& e) {
  json j{{"version", kVersion}, {"message", e.what()}, {"exit_code", exit_code_for(e)}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    j["error"] = err->kind();
    if (const auto* res = dynamic_cast<const ResonanceError*>(&e))
      j["condition_estimate"] = res->condition();
  } else {
    j["error"] = "internal";
  }
  return j;
}

}  // namespace oblique
