#include "oblique/fields.hpp"

#include "oblique/errors.hpp"
#include "oblique/specfun.hpp"

#include <cmath>
#include <numbers>

namespace oblique {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

}  // namespace

Vec2 FarFieldPattern::direction(std::size_t k) const {
  return {std::cos(angles.at(k)), std::sin(angles.at(k))};
}

std::vector<double> equispaced_angles(int count) {
  if (count < 1) throw ConfigError("direction count must be positive");
  std::vector<double> a(count);
  for (int k = 0; k < count; ++k) a[k] = 2.0 * kPi * k / count;
  return a;
}

FarFieldPattern far_field(const PhysicsConfig& cfg, const NodeSet& nodes,
                          const BoundaryTraces& traces, const std::vector<double>& angles) {
  const double k0 = cfg.kappa[0];
  const cplx prefactor = std::exp(kI * (kPi / 4.0)) / std::sqrt(8.0 * kPi * k0);
  const double h = kPi / nodes.n();
  FarFieldPattern out;
  out.angles = angles;
  out.u_inf.reserve(angles.size());
  out.v_inf.reserve(angles.size());
  for (double a : angles) {
    const Vec2 xhat{std::cos(a), std::sin(a)};
    cplx su = 0.0, sv = 0.0;
    for (int j = 0; j < nodes.size(); ++j) {
      const FrameSample& f = nodes.frame(j);
      const cplx phase = std::exp(-kI * (k0 * xhat.dot(f.z)));
      const cplx dl = -kI * (k0 * xhat.dot(f.normal));
      su += phase * (dl * traces.u0[j] - traces.dn_u0[j]) * f.speed;
      sv += phase * (dl * traces.v0[j] - traces.dn_v0[j]) * f.speed;
    }
    out.u_inf.push_back(prefactor * h * su);
    out.v_inf.push_back(prefactor * h * sv);
  }
  return out;
}

double GridSpec::dx() const { return nx > 1 ? (x_max - x_min) / (nx - 1) : 0.0; }
double GridSpec::dy() const { return ny > 1 ? (y_max - y_min) / (ny - 1) : 0.0; }

GridSpec GridSpec::square(int m, double half_extent) {
  if (m < 1) throw ConfigError("grid parameter m must be positive");
  if (!(half_extent > 0.0)) throw ConfigError("grid extent must be positive");
  GridSpec g;
  g.x_min = g.y_min = -half_extent;
  g.x_max = g.y_max = half_extent;
  g.nx = g.ny = 2 * m;
  return g;
}

Region classify(const BoundaryPolygon& polygon, const TrigCurve& curve, int n, double factor,
                const Vec2& x) {
  const auto near = polygon.nearest(x);
  const double speed = curve_eval(curve, near.t, 1).speed;
  if (near.distance <= factor * (2.0 * kPi / n) * speed) return Region::Excluded;
  return polygon.inside(x) ? Region::Interior : Region::Exterior;
}

FieldPair near_field_at(const PhysicsConfig& cfg, const NodeSet& nodes,
                        const BoundaryTraces& traces, Region region, const Vec2& x) {
  if (region == Region::Excluded) return {0.0, 0.0};
  const bool exterior = region == Region::Exterior;
  const double kappa = cfg.kappa[exterior ? 0 : 1];
  const VectorC& u = exterior ? traces.u0 : traces.u1;
  const VectorC& v = exterior ? traces.v0 : traces.v1;
  const VectorC& du = exterior ? traces.dn_u0 : traces.dn_u1;
  const VectorC& dv = exterior ? traces.dn_v0 : traces.dn_v1;
  cplx su = 0.0, sv = 0.0;
  for (int j = 0; j < nodes.size(); ++j) {
    const FrameSample& f = nodes.frame(j);
    const Vec2 r = x - f.z;
    const double rho = r.norm();
    if (!(rho > 0.0)) throw ContractError("near-field point lies on a quadrature node");
    const auto h = specfun::hankel01(kappa * rho);
    const cplx phi = 0.25 * kI * h.h0;
    const cplx dphi = 0.25 * kI * kappa * h.h1 * (r.dot(f.normal) / rho);
    su += (dphi * u[j] - phi * du[j]) * f.speed;
    sv += (dphi * v[j] - phi * dv[j]) * f.speed;
  }
  const double w = (exterior ? 1.0 : -1.0) * kPi / nodes.n();
  return {w * su, w * sv};
}

FieldGrid near_field(const PhysicsConfig& cfg, const NodeSet& nodes, const BoundaryTraces& traces,
                     const GridSpec& grid, const NearFieldOptions& opts) {
  if (grid.nx < 1 || grid.ny < 1) throw ConfigError("grid must have at least one point per axis");
  if (!(opts.exclusion_factor >= 0.0)) throw ConfigError("exclusion factor must be nonnegative");
  const BoundaryPolygon polygon(nodes.curve(), 8 * nodes.n());
  FieldGrid out;
  out.spec = grid;
  const std::size_t total = static_cast<std::size_t>(grid.nx) * grid.ny;
  out.region.resize(total);
  out.u.assign(total, 0.0);
  out.v.assign(total, 0.0);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Vec2 x{grid.x(i), grid.y(j)};
      const std::size_t k = out.index(i, j);
      const Region reg = classify(polygon, nodes.curve(), nodes.n(), opts.exclusion_factor, x);
      out.region[k] = reg;
      if (reg == Region::Excluded) continue;
      const FieldPair val = near_field_at(cfg, nodes, traces, reg, x);
      out.u[k] = val.u;
      out.v[k] = val.v;
      if (opts.total_field && reg == Region::Exterior) out.u[k] += incident_field(cfg, x);
    }
  }
  return out;
}

}  // namespace oblique
