#include "oblique/region.hpp"

#include "oblique/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace oblique {

const char* to_string(Region region) {
  switch (region) {
    case Region::Interior: return "interior";
    case Region::Exterior: return "exterior";
    case Region::Excluded: return "excluded";
  }
  return "?";
}

BoundaryPolygon::BoundaryPolygon(const TrigCurve& curve, int samples) {
  if (samples < 16) throw ContractError("BoundaryPolygon: need at least 16 samples");
  vertices_.reserve(samples);
  params_.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    vertices_.push_back(curve.derivative(t, 0));
    params_.push_back(t);
  }
}

int BoundaryPolygon::winding_number(const Vec2& x) const {
  // Crossing-number form of the winding number (Sunday's algorithm).
  int wn = 0;
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % m];
    const double cross = (b.x() - a.x()) * (x.y() - a.y()) - (x.x() - a.x()) * (b.y() - a.y());
    if (a.y() <= x.y()) {
      if (b.y() > x.y() && cross > 0.0) ++wn;
    } else if (b.y() <= x.y() && cross < 0.0) {
      --wn;
    }
  }
  return wn;
}

BoundaryPolygon::Nearest BoundaryPolygon::nearest(const Vec2& x) const {
  Nearest best{std::numeric_limits<double>::infinity(), 0.0};
  const std::size_t m = vertices_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = vertices_[i];
    const Vec2& b = vertices_[(i + 1) % m];
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    const double u = len2 > 0.0 ? std::clamp((x - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    const double d = (a + u * ab - x).norm();
    if (d < best.distance) best = {d, u < 0.5 ? params_[i] : params_[(i + 1) % m]};
  }
  return best;
}

}  // namespace oblique
