#include "oblique/manufactured.hpp"

#include "oblique/errors.hpp"
#include "oblique/region.hpp"
#include "oblique/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oblique {

namespace {

constexpr double kMinSourceDistance = 1e-6;

// H0(k|r|) and its gradient with respect to x, where r = x - z.
struct PointSource {
  cplx value;
  Eigen::Vector2cd gradient;
};

PointSource point_source(double kappa, const Vec2& x, const Vec2& z) {
  const Vec2 r = x - z;
  const double rho = r.norm();
  if (!(rho > 0.0)) throw PlacementError("evaluation point coincides with a source point");
  const auto h = specfun::hankel01(kappa * rho);
  // d/dx H0(k|r|) = -k H1(k|r|) r/|r|
  const cplx g = -kappa * h.h1 / rho;
  return {h.h0, Eigen::Vector2cd(g * r.x(), g * r.y())};
}

cplx along(const Eigen::Vector2cd& grad, const Vec2& dir) {
  return grad.x() * dir.x() + grad.y() * dir.y();
}

void check_side(const BoundaryPolygon& poly, const Vec2& z, bool want_inside, const char* name) {
  const auto near = poly.nearest(z);
  if (near.distance < kMinSourceDistance) {
    std::ostringstream msg;
    msg << "source point " << name << " = (" << z.x() << ", " << z.y() << ") lies on the boundary";
    throw PlacementError(msg.str());
  }
  if (poly.inside(z) != want_inside) {
    std::ostringstream msg;
    msg << "source point " << name << " = (" << z.x() << ", " << z.y() << ") must lie "
        << (want_inside ? "inside" : "outside") << " the cylinder";
    throw PlacementError(msg.str());
  }
}

}  // namespace

void validate_sources(const TrigCurve& curve, const SourcePoints& pts) {
  const BoundaryPolygon poly(curve, 4096);
  check_side(poly, pts.z1, true, "z1");
  check_side(poly, pts.z2, true, "z2");
  check_side(poly, pts.z3, false, "z3");
  check_side(poly, pts.z4, false, "z4");
}

ManufacturedData manufactured_data(const PhysicsConfig& cfg, const FrameSample& frame,
                                   const SourcePoints& pts) {
  if (frame.order < 1) throw ContractError("manufactured_data: frame needs first derivatives");
  for (const Vec2* z : {&pts.z1, &pts.z2, &pts.z3, &pts.z4}) {
    if ((frame.z - *z).norm() < kMinSourceDistance)
      throw PlacementError("manufactured_data: a source point lies on the boundary");
  }
  const double k0 = cfg.kappa[0];
  const double k1 = cfg.kappa[1];
  const double w = cfg.omega();
  const Vec2& n = frame.normal;
  const Vec2& tau = frame.tangent;

  const PointSource u0 = point_source(k0, frame.z, pts.z1);
  const PointSource v0 = point_source(k0, frame.z, pts.z2);
  const PointSource u1 = point_source(k1, frame.z, pts.z3);
  const PointSource v1 = point_source(k1, frame.z, pts.z4);

  ManufacturedData f;
  f.f1 = u1.value - u0.value;
  f.f2 = cfg.mu_t[1] * w * along(v1.gradient, n) + cfg.beta_t[1] * along(u1.gradient, tau) -
         cfg.mu_t[0] * w * along(v0.gradient, n) - cfg.beta_t[0] * along(u0.gradient, tau);
  f.f3 = v1.value - v0.value;
  f.f4 = cfg.epsilon_t[1] * w * along(u1.gradient, n) - cfg.beta_t[1] * along(v1.gradient, tau) -
         cfg.epsilon_t[0] * w * along(u0.gradient, n) + cfg.beta_t[0] * along(v0.gradient, tau);
  return f;
}

FieldPair exact_exterior_fields(const PhysicsConfig& cfg, const SourcePoints& pts, const Vec2& x) {
  return {point_source(cfg.kappa[0], x, pts.z1).value, point_source(cfg.kappa[0], x, pts.z2).value};
}

FieldPair exact_interior_fields(const PhysicsConfig& cfg, const SourcePoints& pts, const Vec2& x) {
  return {point_source(cfg.kappa[1], x, pts.z3).value, point_source(cfg.kappa[1], x, pts.z4).value};
}

cplx exact_far_field(const PhysicsConfig& cfg, const Vec2& source, const Vec2& xhat) {
  const double k0 = cfg.kappa[0];
  const cplx prefactor = cplx(0.0, -4.0) * std::polar(1.0, std::numbers::pi / 4) /
                         std::sqrt(8.0 * std::numbers::pi * k0);
  return prefactor * std::polar(1.0, -k0 * xhat.dot(source));
}

}  // namespace oblique
