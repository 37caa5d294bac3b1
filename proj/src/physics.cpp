#include "oblique/physics.hpp"

#include "oblique/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oblique {

namespace {

void require_positive(const char* name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << name << " must be a positive finite number, got " << value;
    throw ConfigError(msg.str());
  }
}

}  // namespace

Vec2 PhysicsConfig::direction() const {
  return {std::cos(inputs.phi), std::sin(inputs.phi)};
}

PhysicsConfig derive(const MaterialInputs& in) {
  require_positive("epsilon0", in.epsilon0);
  require_positive("mu0", in.mu0);
  require_positive("epsilon1", in.epsilon1);
  require_positive("mu1", in.mu1);
  require_positive("omega", in.omega);
  if (!std::isfinite(in.phi)) throw ConfigError("phi must be finite");
  if (!(in.theta > 0.0 && in.theta < std::numbers::pi)) {
    std::ostringstream msg;
    msg << "theta must lie in (0, pi), got " << in.theta;
    throw AdmissibilityError(msg.str());
  }

  PhysicsConfig cfg;
  cfg.inputs = in;
  cfg.k0 = in.omega * std::sqrt(in.mu0 * in.epsilon0);
  // Normal incidence is the decoupled case; keep beta exactly zero there.
  cfg.cos_theta = std::abs(in.theta - std::numbers::pi / 2) <= 4e-16 ? 0.0 : std::cos(in.theta);
  cfg.beta = cfg.k0 * cfg.cos_theta;
  cfg.kappa[0] = cfg.k0 * std::sin(in.theta);

  const double kappa1_sq = in.mu1 * in.epsilon1 * in.omega * in.omega - cfg.beta * cfg.beta;
  if (!(kappa1_sq > 0.0)) {
    std::ostringstream msg;
    msg << "inadmissible parameters: kappa_1^2 = mu1 eps1 omega^2 - beta^2 = " << kappa1_sq
        << " must be positive (requires mu1 eps1 > mu0 eps0 cos^2 theta)";
    throw AdmissibilityError(msg.str());
  }
  cfg.kappa[1] = std::sqrt(kappa1_sq);

  const double mu[2] = {in.mu0, in.mu1};
  const double eps[2] = {in.epsilon0, in.epsilon1};
  for (int j = 0; j < 2; ++j) {
    const double k2 = cfg.kappa[j] * cfg.kappa[j];
    cfg.mu_t[j] = mu[j] / k2;
    cfg.epsilon_t[j] = eps[j] / k2;
    cfg.beta_t[j] = cfg.beta / k2;
  }
  return cfg;
}

cplx incident_field(const PhysicsConfig& cfg, const Vec2& x) {
  const double amplitude = std::sin(cfg.inputs.theta) / std::sqrt(cfg.inputs.epsilon0);
  const double phase = cfg.kappa[0] * cfg.direction().dot(x);
  return amplitude * cplx(std::cos(phase), std::sin(phase));
}

IncidentTrace incident_trace(const PhysicsConfig& cfg, const FrameSample& frame) {
  if (frame.order < 1) throw ContractError("incident_trace: frame needs first derivatives");
  const Vec2 d = cfg.direction();
  const cplx e = incident_field(cfg, frame.z);
  const cplx ik(0.0, cfg.kappa[0]);
  return {e, ik * frame.normal.dot(d) * e, ik * frame.tangent.dot(d) * e};
}

}  // namespace oblique
