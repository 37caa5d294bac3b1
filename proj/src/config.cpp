#include "oblique/config.hpp"

#include "oblique/errors.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

namespace oblique {

using nlohmann::json;

const char* to_string(Workflow w) {
  return w == Workflow::PlaneWave ? "plane_wave" : "manufactured";
}

TrigCurve CurveSpec::build() const {
  if (preset == "kite") return kite_curve();
  if (preset == "circle") {
    if (!(radius > 0.0)) throw ConfigError("circle radius must be positive");
    return circle_curve(radius, center);
  }
  if (preset == "ellipse") {
    if (!(semi_x > 0.0 && semi_y > 0.0)) throw ConfigError("ellipse semi-axes must be positive");
    return ellipse_curve(semi_x, semi_y, center);
  }
  if (preset == "custom") return TrigCurve("custom", x, y);
  throw ConfigError("unknown curve preset '" + preset + "'");
}

std::vector<Vec2> default_probes() {
  std::vector<Vec2> p;
  for (int k = 0; k < 8; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 8.0 + 0.3;
    p.emplace_back(4.5 * std::cos(a), 4.5 * std::sin(a));
  }
  for (const Vec2& x : {Vec2(0.0, 0.0), Vec2(0.5, 0.0), Vec2(0.5, -1.0), Vec2(-1.0, -1.0),
                        Vec2(-0.5, -1.5), Vec2(1.0, 0.5)})
    p.push_back(x);
  return p;
}

void RunConfig::validate() const {
  if (n < 4) throw ConfigError("n must be at least 4");
  if (n > 512) throw ConfigError("n above 512 is outside the supported range");
  if (directions < 1) throw ConfigError("direction count must be positive");
  if (n_list.empty()) throw ConfigError("n_list must not be empty");
  for (int m : n_list)
    if (m < 4 || m > 512) throw ConfigError("n_list entries must lie in [4, 512]");
  if (grid) {
    if (grid->nx < 1 || grid->ny < 1) throw ConfigError("grid counts must be positive");
    if (!(grid->x_max >= grid->x_min && grid->y_max >= grid->y_min))
      throw ConfigError("grid bounds are inverted");
  }
  if (!(exclusion_factor >= 0.0)) throw ConfigError("exclusion_factor must be nonnegative");
  derive(physics);
  const TrigCurve c = curve.build();
  orientation_check(c);
  if (workflow == Workflow::Manufactured) validate_sources(c, sources);
}

namespace {

Vec2 read_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ConfigError(std::string(what) + " must be a two-element number array");
  return {j[0].get<double>(), j[1].get<double>()};
}

json write_point(const Vec2& p) { return json::array({p.x(), p.y()}); }

TrigSeries read_series(const json& j, const char* what) {
  TrigSeries s;
  s.offset = j.value("offset", 0.0);
  for (const auto& t : j.value("terms", json::array())) {
    TrigTerm term;
    term.k = t.at("k").get<int>();
    term.cos_coeff = t.value("cos", 0.0);
    term.sin_coeff = t.value("sin", 0.0);
    s.terms.push_back(term);
  }
  if (s.terms.empty()) throw ConfigError(std::string(what) + " needs at least one term");
  return s;
}

json write_series(const TrigSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back({{"k", t.k}, {"cos", t.cos_coeff}, {"sin", t.sin_coeff}});
  return {{"offset", s.offset}, {"terms", terms}};
}

GridSpec read_grid(const json& j) {
  if (j.contains("m")) return GridSpec::square(j.at("m").get<int>(), j.value("half_extent", 5.0));
  GridSpec g;
  g.x_min = j.at("x_min").get<double>();
  g.x_max = j.at("x_max").get<double>();
  g.y_min = j.at("y_min").get<double>();
  g.y_max = j.at("y_max").get<double>();
  g.nx = j.at("nx").get<int>();
  g.ny = j.at("ny").get<int>();
  return g;
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const char* block) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw ConfigError(std::string("unknown key '") + it.key() + "' in " + block);
  }
}

}  // namespace

RunConfig parse_config(const json& j) try {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(j,
                 {"format_version", "workflow", "curve", "physics", "n", "n_list", "directions",
                  "grid", "sources", "probes", "options", "output_dir"},
                 "config");
  const int version = j.value("format_version", kConfigFormatVersion);
  if (version != kConfigFormatVersion)
    throw ConfigError("unsupported format_version " + std::to_string(version));

  RunConfig c;
  if (j.contains("workflow")) {
    const auto w = j.at("workflow").get<std::string>();
    if (w == "plane_wave") c.workflow = Workflow::PlaneWave;
    else if (w == "manufactured") c.workflow = Workflow::Manufactured;
    else throw ConfigError("workflow must be 'plane_wave' or 'manufactured'");
  }
  if (j.contains("curve")) {
    const json& cj = j.at("curve");
    reject_unknown(cj, {"preset", "radius", "semi_axes", "center", "x", "y"}, "curve");
    c.curve.preset = cj.value("preset", std::string(cj.contains("x") ? "custom" : "kite"));
    c.curve.radius = cj.value("radius", 1.0);
    if (cj.contains("semi_axes")) {
      const Vec2 ab = read_point(cj.at("semi_axes"), "curve.semi_axes");
      c.curve.semi_x = ab.x();
      c.curve.semi_y = ab.y();
    }
    if (cj.contains("center")) c.curve.center = read_point(cj.at("center"), "curve.center");
    if (c.curve.preset == "custom") {
      if (!cj.contains("x") || !cj.contains("y"))
        throw ConfigError("custom curve needs 'x' and 'y' series");
      c.curve.x = read_series(cj.at("x"), "curve.x");
      c.curve.y = read_series(cj.at("y"), "curve.y");
    }
  }
  if (j.contains("physics")) {
    const json& p = j.at("physics");
    reject_unknown(p, {"epsilon0", "mu0", "epsilon1", "mu1", "omega", "theta", "phi"}, "physics");
    MaterialInputs& m = c.physics;
    m.epsilon0 = p.value("epsilon0", m.epsilon0);
    m.mu0 = p.value("mu0", m.mu0);
    m.epsilon1 = p.value("epsilon1", m.epsilon1);
    m.mu1 = p.value("mu1", m.mu1);
    m.omega = p.value("omega", m.omega);
    m.theta = p.value("theta", m.theta);
    m.phi = p.value("phi", m.phi);
  }
  c.n = j.value("n", c.n);
  if (j.contains("n_list")) c.n_list = j.at("n_list").get<std::vector<int>>();
  c.directions = j.value("directions", c.directions);
  if (j.contains("grid") && !j.at("grid").is_null()) c.grid = read_grid(j.at("grid"));
  if (j.contains("sources")) {
    const json& s = j.at("sources");
    reject_unknown(s, {"z1", "z2", "z3", "z4"}, "sources");
    if (s.contains("z1")) c.sources.z1 = read_point(s.at("z1"), "sources.z1");
    if (s.contains("z2")) c.sources.z2 = read_point(s.at("z2"), "sources.z2");
    if (s.contains("z3")) c.sources.z3 = read_point(s.at("z3"), "sources.z3");
    if (s.contains("z4")) c.sources.z4 = read_point(s.at("z4"), "sources.z4");
  }
  if (j.contains("probes")) {
    for (const auto& p : j.at("probes")) c.probes.push_back(read_point(p, "probe"));
  } else {
    c.probes = default_probes();
  }
  if (j.contains("options")) {
    const json& o = j.at("options");
    reject_unknown(o, {"preconditioned", "exclusion_factor", "total_field"}, "options");
    c.preconditioned = o.value("preconditioned", c.preconditioned);
    c.exclusion_factor = o.value("exclusion_factor", c.exclusion_factor);
    c.total_field = o.value("total_field", c.total_field);
  }
  c.output_dir = j.value("output_dir", c.output_dir);
  return c;
} catch (const json::exception& e) {
  throw ConfigError(std::string("malformed config: ") + e.what());
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json curve{{"preset", c.curve.preset}};
  if (c.curve.preset == "circle") {
    curve["radius"] = c.curve.radius;
    curve["center"] = write_point(c.curve.center);
  } else if (c.curve.preset == "ellipse") {
    curve["semi_axes"] = json::array({c.curve.semi_x, c.curve.semi_y});
    curve["center"] = write_point(c.curve.center);
  } else if (c.curve.preset == "custom") {
    curve["x"] = write_series(c.curve.x);
    curve["y"] = write_series(c.curve.y);
  }
  const MaterialInputs& m = c.physics;
  json out{{"format_version", kConfigFormatVersion},
           {"workflow", to_string(c.workflow)},
           {"curve", curve},
           {"physics",
            {{"epsilon0", m.epsilon0}, {"mu0", m.mu0}, {"epsilon1", m.epsilon1}, {"mu1", m.mu1},
             {"omega", m.omega}, {"theta", m.theta}, {"phi", m.phi}}},
           {"n", c.n},
           {"n_list", c.n_list},
           {"directions", c.directions},
           {"sources",
            {{"z1", write_point(c.sources.z1)}, {"z2", write_point(c.sources.z2)},
             {"z3", write_point(c.sources.z3)}, {"z4", write_point(c.sources.z4)}}},
           {"options",
            {{"preconditioned", c.preconditioned}, {"exclusion_factor", c.exclusion_factor},
             {"total_field", c.total_field}}},
           {"output_dir", c.output_dir}};
  json probes = json::array();
  for (const Vec2& p : c.probes) probes.push_back(write_point(p));
  out["probes"] = probes;
  if (c.grid) {
    out["grid"] = {{"x_min", c.grid->x_min}, {"x_max", c.grid->x_max}, {"y_min", c.grid->y_min},
                   {"y_max", c.grid->y_max}, {"nx", c.grid->nx},       {"ny", c.grid->ny}};
  } else {
    out["grid"] = nullptr;
  }
  return out;
}

}  // namespace oblique
