#pragma once

#include "oblique/geometry.hpp"

namespace oblique {

enum class Region { Interior, Exterior, Excluded };
const char* to_string(Region region);

/// Closed polygon through `samples` equispaced curve points, used for
/// inside/outside classification and distance-to-boundary queries.
class BoundaryPolygon {
 public:
  BoundaryPolygon(const TrigCurve& curve, int samples);

  /// Winding number of the polygon around x (1 inside a counter-clockwise curve).
  int winding_number(const Vec2& x) const;
  bool inside(const Vec2& x) const { return winding_number(x) != 0; }

  /// Distance from x to the polygon and the parameter of the closest vertex.
  struct Nearest {
    double distance;
    double t;
  };
  Nearest nearest(const Vec2& x) const;

 private:
  std::vector<Vec2> vertices_;
  std::vector<double> params_;
};

}  // namespace oblique
