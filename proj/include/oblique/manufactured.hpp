#pragma once

#include "oblique/geometry.hpp"
#include "oblique/physics.hpp"

namespace oblique {

/// Point sources of the manufactured transmission problem: z1, z2 inside the
/// cylinder (they generate the exterior fields u0, v0), z3, z4 outside
/// (they generate the interior fields u1, v1).
struct SourcePoints {
  Vec2 z1{0.5, 1.0};
  Vec2 z2{0.0, -0.5};
  Vec2 z3{1.0, 2.0};
  Vec2 z4{0.0, -2.5};
};

/// Throws PlacementError unless z1, z2 lie inside and z3, z4 outside the
/// curve, each at distance >= 1e-6 from it.
void validate_sources(const TrigCurve& curve, const SourcePoints& pts);

/// Jumps f1..f4 of the four transmission conditions for the exact fields
/// u0 = H0(k0|x-z1|), v0 = H0(k0|x-z2|), u1 = H0(k1|x-z3|), v1 = H0(k1|x-z4|).
struct ManufacturedData {
  cplx f1;  // u1 - u0
  cplx f2;  // mu~1 w dn v1 + b1 dt u1 - mu~0 w dn v0 - b0 dt u0
  cplx f3;  // v1 - v0
  cplx f4;  // eps~1 w dn u1 - b1 dt v1 - eps~0 w dn u0 + b0 dt v0
};

ManufacturedData manufactured_data(const PhysicsConfig& cfg, const FrameSample& frame,
                                   const SourcePoints& pts);

/// Exact fields of the manufactured problem.
struct FieldPair {
  cplx u;
  cplx v;
};
FieldPair exact_exterior_fields(const PhysicsConfig& cfg, const SourcePoints& pts, const Vec2& x);
FieldPair exact_interior_fields(const PhysicsConfig& cfg, const SourcePoints& pts, const Vec2& x);

/// Far field pattern of H0(kappa0 |x - source|) in direction xhat.
cplx exact_far_field(const PhysicsConfig& cfg, const Vec2& source, const Vec2& xhat);

}  // namespace oblique
