#pragma once

#include "oblique/region.hpp"
#include "oblique/solve.hpp"

#include <vector>

namespace oblique {

struct FarFieldPattern {
  std::vector<double> angles;  // radians on [0, 2pi)
  std::vector<cplx> u_inf;
  std::vector<cplx> v_inf;
  Vec2 direction(std::size_t k) const;
};

/// `count` equispaced angles 2 pi k / count.
std::vector<double> equispaced_angles(int count);

/// Trapezoid discretisation of the far-field integrals of the exterior
/// representation u0 = D0 u0 - S0 dn u0.
FarFieldPattern far_field(const PhysicsConfig& cfg, const NodeSet& nodes,
                          const BoundaryTraces& traces, const std::vector<double>& angles);

struct GridSpec {
  double x_min = -5.0, x_max = 5.0;
  double y_min = -5.0, y_max = 5.0;
  int nx = 256, ny = 256;
  double dx() const;
  double dy() const;
  double x(int i) const { return x_min + i * dx(); }
  double y(int j) const { return y_min + j * dy(); }
  /// Square grid of 2m points per side on [-half, half]^2, spacing 2 half / (2m - 1).
  static GridSpec square(int m, double half_extent = 5.0);
};

/// Near-field values on a grid. Points are stored row-major with x fastest.
/// Exterior points carry (u0, v0), interior points (u1, v1); excluded points
/// carry zero.
struct FieldGrid {
  GridSpec spec;
  std::vector<Region> region;
  std::vector<cplx> u;
  std::vector<cplx> v;
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * spec.nx + i; }
};

struct NearFieldOptions {
  double exclusion_factor = 1.0;  // band = factor * (2 pi / n) * |z'| at the nearest point
  bool total_field = false;       // add the incident e3 to exterior u (plane-wave mode)
};

/// Classifies x against the curve sampled at 8n points. Points within the
/// band (and points on the curve, even for a zero band) are Excluded.
Region classify(const BoundaryPolygon& polygon, const TrigCurve& curve, int n, double factor,
                const Vec2& x);

/// Representation-formula evaluation at a single point of known region.
FieldPair near_field_at(const PhysicsConfig& cfg, const NodeSet& nodes,
                        const BoundaryTraces& traces, Region region, const Vec2& x);

FieldGrid near_field(const PhysicsConfig& cfg, const NodeSet& nodes, const BoundaryTraces& traces,
                     const GridSpec& grid, const NearFieldOptions& opts = {});

}  // namespace oblique
