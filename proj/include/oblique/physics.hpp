#pragma once

#include "oblique/geometry.hpp"

#include <array>
#include <complex>

namespace oblique {

using cplx = std::complex<double>;

/// Raw material and incidence parameters. Index 0 is the exterior medium,
/// index 1 the cylinder.
struct MaterialInputs {
  double epsilon0 = 1.0;
  double mu0 = 1.0;
  double epsilon1 = 3.0;
  double mu1 = 2.0;
  double omega = 1.0;
  double theta = 1.0471975511965976;  // pi/3
  double phi = 1.5707963267948966;    // pi/2
};

/// Validated parameters together with every derived symbol used by the
/// kernels and the transmission conditions. Immutable once built.
struct PhysicsConfig {
  MaterialInputs inputs;
  double k0 = 0.0;         // omega sqrt(mu0 eps0)
  double cos_theta = 0.0;  // exactly 0 at normal incidence
  double beta = 0.0;       // k0 cos(theta), the axial wavenumber
  std::array<double, 2> kappa{};     // transverse wavenumbers per domain
  std::array<double, 2> mu_t{};      // mu_j / kappa_j^2
  std::array<double, 2> epsilon_t{}; // eps_j / kappa_j^2
  std::array<double, 2> beta_t{};    // beta / kappa_j^2

  double omega() const { return inputs.omega; }
  bool decoupled() const { return beta == 0.0; }
  /// Incidence direction (cos phi, sin phi) in the cross-section plane.
  Vec2 direction() const;
};

/// Validates `in` and derives all symbols.
///
/// Throws ConfigError for non-positive materials or frequency, and
/// AdmissibilityError for theta outside (0, pi) or when
/// kappa_1^2 = mu1 eps1 omega^2 - beta^2 is not positive. theta = pi/2 gives
/// beta = 0 exactly.
PhysicsConfig derive(const MaterialInputs& in);

/// Incident electric trace e_3^inc and its normal/tangential derivatives on
/// the boundary. The magnetic incident trace vanishes for TM polarisation.
struct IncidentTrace {
  cplx value;
  cplx d_normal;
  cplx d_tangent;
};

IncidentTrace incident_trace(const PhysicsConfig& cfg, const FrameSample& frame);

/// e_3^inc(x) = sin(theta)/sqrt(eps0) exp(i kappa0 d.x).
cplx incident_field(const PhysicsConfig& cfg, const Vec2& x);

}  // namespace oblique
