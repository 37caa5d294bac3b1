#pragma once

#include "oblique/operators.hpp"

namespace oblique {

/// Solved Dirichlet traces (phi0 = u0|Gamma, psi0 = v0|Gamma).
struct SystemSolution {
  VectorC phi0;
  VectorC psi0;
  double relative_residual = 0.0;   // |lhs x - rhs| / |rhs|
  double condition_estimate = 0.0;  // of lhs
};

/// Dense LU solve. Throws ResonanceError when the condition estimate of the
/// system exceeds 1e12.
SystemSolution solve_system(const BlockSystem& sys);

/// Dirichlet, normal and tangential traces of all four fields at the nodes.
struct BoundaryTraces {
  VectorC u0, v0, u1, v1;
  VectorC dn_u0, dn_v0, dn_u1, dn_v1;
  VectorC dt_u0, dt_v0, dt_u1, dt_v1;
  double condition_estimate = 0.0;
};

BoundaryTraces recover_traces(const Assembly& a, const SystemSolution& sol, const RhsMode& mode);

/// Tangential derivatives by spectral differentiation of the Dirichlet traces,
/// (d/dt psi)/|z'|; an independent cross-check of the L_j route.
struct SpectralTangents {
  VectorC dt_u0, dt_v0, dt_u1, dt_v1;
};
SpectralTangents spectral_tangents(const Assembly& a, const BoundaryTraces& tr);

/// Pointwise residuals of the four transmission conditions, evaluated from
/// recovered traces and the incident/manufactured data.
struct TransmissionResiduals {
  VectorC dirichlet_u;   // u1 - u0 - (e_inc | f1)
  VectorC mixed_v;       // mu~1 w dn v1 + b1 dt u1 - mu~0 w dn v0 - b0 dt u0 - (b0 dt e_inc | f2)
  VectorC dirichlet_v;   // v1 - v0 - (0 | f3)
  VectorC mixed_u;       // eps~1 w dn u1 - b1 dt v1 - eps~0 w dn u0 + b0 dt v0 - (eps~0 w dn e_inc | f4)
  double sup_norm() const;
};
TransmissionResiduals transmission_residuals(const Assembly& a, const BoundaryTraces& tr,
                                             const RhsMode& mode);

/// Assemble, solve and recover traces in one call.
struct Solution {
  Assembly assembly;
  BlockSystem system;
  SystemSolution solution;
  BoundaryTraces traces;
};
Solution solve_problem(const PhysicsConfig& cfg, const TrigCurve& curve, int n,
                       const RhsMode& mode, SystemForm form = SystemForm::Compact);

}  // namespace oblique
