#include "oblique/solve.hpp"

#include "oblique/errors.hpp"

#include <algorithm>
#include <sstream>

namespace oblique {

SystemSolution solve_system(const BlockSystem& sys) {
  if (!sys.lhs.allFinite() || !sys.rhs.allFinite())
    throw ContractError("solve_system: non-finite system entries");
  if (!(sys.condition_estimate <= kResonanceCondition)) {
    std::ostringstream msg;
    msg << "block system is ill-conditioned (condition estimate " << sys.condition_estimate
        << "); check that kappa_1^2 is not an interior Dirichlet eigenvalue and kappa_0^2 "
           "is not an interior Dirichlet or Neumann eigenvalue";
    throw ResonanceError(msg.str(), sys.condition_estimate);
  }
  const VectorC x = sys.lu.solve(sys.rhs);
  const int m = static_cast<int>(x.size() / 2);
  SystemSolution out;
  out.phi0 = x.head(m);
  out.psi0 = x.tail(m);
  const double rhs_norm = sys.rhs.norm();
  const double res = (sys.lhs * x - sys.rhs).norm();
  out.relative_residual = rhs_norm > 0.0 ? res / rhs_norm : res;
  out.condition_estimate = sys.condition_estimate;
  return out;
}

BoundaryTraces recover_traces(const Assembly& a, const SystemSolution& sol, const RhsMode& mode) {
  const BoundaryData bd = boundary_data(a, mode);
  BoundaryTraces tr;
  tr.u0 = sol.phi0;
  tr.v0 = sol.psi0;
  if (bd.manufactured) {
    tr.u1 = tr.u0 + bd.f1;
    tr.v1 = tr.v0 + bd.f3;
  } else {
    tr.u1 = tr.u0 + bd.e;
    tr.v1 = tr.v0;
  }
  const MatrixC& K0 = a.comp[0].K.matrix;
  const MatrixC& K1 = a.comp[1].K.matrix;
  const MatrixC& L0 = a.comp[0].L.matrix;
  const MatrixC& L1 = a.comp[1].L.matrix;
  tr.dn_u0 = K0 * tr.u0;
  tr.dn_v0 = K0 * tr.v0;
  tr.dn_u1 = K1 * tr.u1;
  tr.dn_v1 = K1 * tr.v1;
  tr.dt_u0 = L0 * tr.u0;
  tr.dt_v0 = L0 * tr.v0;
  tr.dt_u1 = -(L1 * tr.u1);
  tr.dt_v1 = -(L1 * tr.v1);
  tr.condition_estimate = sol.condition_estimate;
  return tr;
}

SpectralTangents spectral_tangents(const Assembly& a, const BoundaryTraces& tr) {
  const Eigen::MatrixXd d = spectral_derivative_matrix(a.nodes->n());
  const int m = a.nodes->size();
  VectorC inv_speed(m);
  for (int i = 0; i < m; ++i) inv_speed[i] = 1.0 / a.nodes->frame(i).speed;
  auto diff = [&](const VectorC& v) -> VectorC {
    return (d.cast<cplx>() * v).cwiseProduct(inv_speed);
  };
  return {diff(tr.u0), diff(tr.v0), diff(tr.u1), diff(tr.v1)};
}

double TransmissionResiduals::sup_norm() const {
  double s = 0.0;
  for (const VectorC* v : {&dirichlet_u, &mixed_v, &dirichlet_v, &mixed_u})
    if (v->size() > 0) s = std::max(s, v->cwiseAbs().maxCoeff());
  return s;
}

TransmissionResiduals transmission_residuals(const Assembly& a, const BoundaryTraces& tr,
                                             const RhsMode& mode) {
  const PhysicsConfig& c = a.cfg;
  const double w = c.omega();
  const BoundaryData bd = boundary_data(a, mode);
  TransmissionResiduals r;
  r.dirichlet_u = tr.u1 - tr.u0;
  r.dirichlet_v = tr.v1 - tr.v0;
  r.mixed_v = c.mu_t[1] * w * tr.dn_v1 + c.beta_t[1] * tr.dt_u1 - c.mu_t[0] * w * tr.dn_v0 -
              c.beta_t[0] * tr.dt_u0;
  r.mixed_u = c.epsilon_t[1] * w * tr.dn_u1 - c.beta_t[1] * tr.dt_v1 -
              c.epsilon_t[0] * w * tr.dn_u0 + c.beta_t[0] * tr.dt_v0;
  if (bd.manufactured) {
    r.dirichlet_u -= bd.f1;
    r.mixed_v -= bd.f2;
    r.dirichlet_v -= bd.f3;
    r.mixed_u -= bd.f4;
  } else {
    r.dirichlet_u -= bd.e;
    r.mixed_v -= c.beta_t[0] * bd.dt_e;
    r.mixed_u -= c.epsilon_t[0] * w * bd.dn_e;
  }
  return r;
}

Solution solve_problem(const PhysicsConfig& cfg, const TrigCurve& curve, int n,
                       const RhsMode& mode, SystemForm form) {
  Solution s;
  s.assembly = assemble(cfg, curve, n);
  s.system = assemble_system(s.assembly, mode, form);
  s.solution = solve_system(s.system);
  s.traces = recover_traces(s.assembly, s.solution, mode);
  return s;
}

}  // namespace oblique
