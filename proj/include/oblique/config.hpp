#pragma once

#include "oblique/fields.hpp"
#include "oblique/manufactured.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace oblique {

inline constexpr int kConfigFormatVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

enum class Workflow { PlaneWave, Manufactured };
const char* to_string(Workflow w);

/// Curve description as read from a config file: a preset name with its
/// parameters, or explicit trigonometric coefficients.
struct CurveSpec {
  std::string preset = "kite";  // kite | circle | ellipse | custom
  double radius = 1.0;
  double semi_x = 1.0, semi_y = 1.0;
  Vec2 center = Vec2::Zero();
  TrigSeries x, y;  // used when preset == "custom"
  TrigCurve build() const;
};

/// Everything one invocation of the command-line tool needs. Defaults
/// reproduce the kite experiment: (eps1, mu1) = (3, 2), omega = 1,
/// theta = pi/3, phi = pi/2, n = 32, 64 far-field directions.
struct RunConfig {
  Workflow workflow = Workflow::PlaneWave;
  CurveSpec curve;
  MaterialInputs physics;
  int n = 32;
  std::vector<int> n_list{8, 16, 32, 64};
  int directions = 64;
  std::optional<GridSpec> grid;  // near-field grid; absent means no grid output
  SourcePoints sources;
  std::vector<Vec2> probes;
  bool preconditioned = false;
  double exclusion_factor = 1.0;
  bool total_field = false;
  std::string output_dir = "out";

  /// Checks every precondition that does not require assembly: positive
  /// counts, admissible physics, curve orientation and, for manufactured
  /// runs, source placement. Throws ConfigError / AdmissibilityError.
  void validate() const;
};

/// Default probe set used by verification: eight points on the circle of
/// radius 4.5 about the origin and the interior points listed in the README.
std::vector<Vec2> default_probes();

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& cfg);

}  // namespace oblique
