#include "oblique/operators.hpp"

#include "oblique/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace oblique {

namespace {

constexpr double inv_4pi = 0.25 / std::numbers::pi;

DiscreteOperator make(const char* tag, int domain, std::shared_ptr<const NodeSet> nodes) {
  const int m = nodes->size();
  return {std::string(tag) + "_" + std::to_string(domain), domain, MatrixC::Zero(m, m),
          std::move(nodes)};
}

OperatorSet assemble_all(int domain, double kappa, std::shared_ptr<const NodeSet> nodes) {
  const int m = nodes->size();
  const QuadratureRules q(nodes->n());
  const double w = q.trapezoid_weight();
  const double k2 = kappa * kappa;

  OperatorSet ops;
  ops.domain = domain;
  ops.kappa = kappa;
  ops.S = make("S", domain, nodes);
  ops.D = make("D", domain, nodes);
  ops.NS = make("NS", domain, nodes);
  ops.TS = make("TS", domain, nodes);
  ops.ND = make("ND", domain, nodes);
  ops.TD = make("TD", domain, nodes);

  for (int i = 0; i < m; ++i) {
    const FrameSample& ft = nodes->frame(i);
    const double inv_speed = 1.0 / ft.speed;
    for (int j = 0; j < m; ++j) {
      const FrameSample& fs = nodes->frame(j);
      const KernelSplitSet k =
          (i == j) ? kernel_diagonal_all(kappa, ft) : kernel_split_all(kappa, ft, fs);
      const double r = q.log_weight(i, j);
      auto rule = [&](const KernelValue& v) { return r * v.m1 + w * v.m2; };

      const cplx s = rule(at(k, KernelTag::S));
      ops.S.matrix(i, j) = s;
      ops.D.matrix(i, j) = rule(at(k, KernelTag::D));
      ops.NS.matrix(i, j) = rule(at(k, KernelTag::NS));
      ops.TS.matrix(i, j) = rule(at(k, KernelTag::TS)) + inv_4pi * q.cauchy_weight(i, j);

      const double nn = ft.normal.dot(fs.normal);
      const double tn = ft.tangent.dot(fs.normal);
      ops.ND.matrix(i, j) =
          inv_speed * (q.hilbert_weight(i, j) - rule(at(k, KernelTag::ND))) + k2 * nn * s;
      ops.TD.matrix(i, j) = inv_speed * rule(at(k, KernelTag::TD)) + k2 * tn * s;
    }
  }
  return ops;
}

MatrixC half_identity(int m) { return 0.5 * MatrixC::Identity(m, m); }

}  // namespace

const DiscreteOperator& OperatorSet::get(KernelTag tag) const {
  switch (tag) {
    case KernelTag::S: return S;
    case KernelTag::D: return D;
    case KernelTag::NS: return NS;
    case KernelTag::TS: return TS;
    case KernelTag::ND: return ND;
    case KernelTag::TD: return TD;
  }
  throw ContractError("unknown kernel tag");
}

OperatorSet assemble_domain(int domain, double kappa, std::shared_ptr<const NodeSet> nodes) {
  if (!nodes) throw ContractError("assemble_domain: missing node set");
  if (!(kappa > 0.0)) throw ContractError("assemble_domain: wavenumber must be positive");
  return assemble_all(domain, kappa, std::move(nodes));
}

DiscreteOperator assemble_operator(KernelTag tag, double kappa,
                                   std::shared_ptr<const NodeSet> nodes) {
  return assemble_domain(0, kappa, std::move(nodes)).get(tag);
}

DiscreteOperator assemble_basic(KernelTag tag, int domain, const PhysicsConfig& cfg,
                                std::shared_ptr<const NodeSet> nodes) {
  if (tag == KernelTag::ND || tag == KernelTag::TD)
    throw ContractError("assemble_basic: ND and TD need assemble_ND / assemble_TD");
  return assemble_domain(domain, cfg.kappa.at(domain), std::move(nodes)).get(tag);
}

DiscreteOperator assemble_ND(int domain, const PhysicsConfig& cfg,
                             std::shared_ptr<const NodeSet> nodes) {
  return assemble_domain(domain, cfg.kappa.at(domain), std::move(nodes)).ND;
}

DiscreteOperator assemble_TD(int domain, const PhysicsConfig& cfg,
                             std::shared_ptr<const NodeSet> nodes) {
  return assemble_domain(domain, cfg.kappa.at(domain), std::move(nodes)).TD;
}

Composition compose(const OperatorSet& ops) {
  const int m = ops.NS.matrix.rows();
  // Exterior traces satisfy (NS_0 + 1/2 I) dn u = ND_0 u, interior ones
  // (NS_1 - 1/2 I) dn u = ND_1 u.
  const double sign = ops.domain == 0 ? 1.0 : -1.0;
  const MatrixC a = ops.NS.matrix + sign * half_identity(m);
  const Eigen::PartialPivLU<MatrixC> lu(a);
  const double rcond = lu.rcond();
  const double condition = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(condition <= kResonanceCondition)) {
    std::ostringstream msg;
    msg << "NS_" << ops.domain << (ops.domain == 0 ? " + " : " - ")
        << "1/2 I is numerically singular (condition estimate " << condition
        << "): kappa_" << ops.domain << "^2 = " << ops.kappa * ops.kappa
        << (ops.domain == 0 ? " is close to an interior Neumann eigenvalue"
                            : " is close to an interior Dirichlet eigenvalue");
    throw ResonanceError(msg.str(), condition);
  }
  Composition c;
  c.condition = condition;
  c.K = {"K_" + std::to_string(ops.domain), ops.domain, lu.solve(ops.ND.matrix), ops.ND.nodes};
  c.L = {"L_" + std::to_string(ops.domain), ops.domain,
         2.0 * (ops.TD.matrix - ops.TS.matrix * c.K.matrix), ops.ND.nodes};
  return c;
}

DiscreteOperator compose_K(const OperatorSet& ops) { return compose(ops).K; }
DiscreteOperator compose_L(const OperatorSet& ops) { return compose(ops).L; }

Assembly assemble(const PhysicsConfig& cfg, const TrigCurve& curve, int n) {
  Assembly a;
  a.cfg = cfg;
  a.nodes = std::make_shared<const NodeSet>(curve, n);
  for (int j = 0; j < 2; ++j) {
    a.ops[j] = assemble_domain(j, cfg.kappa[j], a.nodes);
    a.comp[j] = compose(a.ops[j]);
  }
  return a;
}

BoundaryData boundary_data(const Assembly& a, const RhsMode& mode) {
  const int m = a.nodes->size();
  BoundaryData bd;
  if (const auto* pts = std::get_if<SourcePoints>(&mode)) {
    validate_sources(a.nodes->curve(), *pts);
    bd.manufactured = true;
    bd.f1.resize(m);
    bd.f2.resize(m);
    bd.f3.resize(m);
    bd.f4.resize(m);
    for (int i = 0; i < m; ++i) {
      const ManufacturedData f = manufactured_data(a.cfg, a.nodes->frame(i), *pts);
      bd.f1[i] = f.f1;
      bd.f2[i] = f.f2;
      bd.f3[i] = f.f3;
      bd.f4[i] = f.f4;
    }
  } else {
    bd.e.resize(m);
    bd.dn_e.resize(m);
    bd.dt_e.resize(m);
    for (int i = 0; i < m; ++i) {
      const IncidentTrace inc = incident_trace(a.cfg, a.nodes->frame(i));
      bd.e[i] = inc.value;
      bd.dn_e[i] = inc.d_normal;
      bd.dt_e[i] = inc.d_tangent;
    }
  }
  return bd;
}

BlockSystem assemble_system(const Assembly& a, const RhsMode& mode, SystemForm form) {
  const PhysicsConfig& cfg = a.cfg;
  const int m = a.nodes->size();
  const double w = cfg.omega();
  const MatrixC& S0 = a.ops[0].S.matrix;
  const MatrixC& K1 = a.comp[1].K.matrix;
  const MatrixC& L0 = a.comp[0].L.matrix;
  const MatrixC& L1 = a.comp[1].L.matrix;

  BlockSystem sys;
  sys.form = form;
  sys.d_block = a.ops[0].D.matrix - half_identity(m);
  const MatrixC s0k1 = S0 * K1;
  const MatrixC coupling = S0 * (cfg.beta_t[1] * L1 + cfg.beta_t[0] * L0);
  sys.k11 = -(cfg.epsilon_t[1] / cfg.epsilon_t[0]) * s0k1;
  sys.k12 = -(1.0 / (cfg.epsilon_t[0] * w)) * coupling;
  sys.k21 = (1.0 / (cfg.mu_t[0] * w)) * coupling;
  sys.k22 = -(cfg.mu_t[1] / cfg.mu_t[0]) * s0k1;

  sys.lhs.resize(2 * m, 2 * m);
  sys.lhs.topLeftCorner(m, m) = sys.d_block + sys.k11;
  sys.lhs.topRightCorner(m, m) = sys.k12;
  sys.lhs.bottomLeftCorner(m, m) = sys.k21;
  sys.lhs.bottomRightCorner(m, m) = sys.d_block + sys.k22;

  const BoundaryData bd = boundary_data(a, mode);
  sys.rhs.resize(2 * m);
  if (bd.manufactured) {
    const double et = cfg.epsilon_t[0] * w;
    const double mt = cfg.mu_t[0] * w;
    sys.rhs.head(m) = -(1.0 / et) * (S0 * bd.f4) +
                      (cfg.epsilon_t[1] / cfg.epsilon_t[0]) * (s0k1 * bd.f1) +
                      (cfg.beta_t[1] / et) * (S0 * (L1 * bd.f3));
    sys.rhs.tail(m) = -(1.0 / mt) * (S0 * bd.f2) + (cfg.mu_t[1] / cfg.mu_t[0]) * (s0k1 * bd.f3) -
                      (cfg.beta_t[1] / mt) * (S0 * (L1 * bd.f1));
  } else {
    sys.rhs.head(m) = -(S0 * bd.dn_e) + (cfg.epsilon_t[1] / cfg.epsilon_t[0]) * (s0k1 * bd.e);
    sys.rhs.tail(m) =
        -(1.0 / (cfg.mu_t[0] * w)) * (S0 * (cfg.beta_t[0] * bd.dt_e + cfg.beta_t[1] * (L1 * bd.e)));
  }

  if (form == SystemForm::Preconditioned) {
    const Eigen::PartialPivLU<MatrixC> dlu(sys.d_block);
    const double rc = dlu.rcond();
    const double cond = rc > 0.0 ? 1.0 / rc : INFINITY;
    if (!(cond <= kResonanceCondition)) {
      std::ostringstream msg;
      msg << "D_0 - 1/2 I is numerically singular (condition estimate " << cond
          << "): kappa_0^2 is close to an interior Dirichlet eigenvalue";
      throw ResonanceError(msg.str(), cond);
    }
    for (int b = 0; b < 2; ++b) {
      sys.lhs.middleRows(b * m, m) = dlu.solve(sys.lhs.middleRows(b * m, m));
      sys.rhs.segment(b * m, m) = dlu.solve(sys.rhs.segment(b * m, m));
    }
  }

  sys.lu.compute(sys.lhs);
  const double rc = sys.lu.rcond();
  sys.condition_estimate = rc > 0.0 ? 1.0 / rc : INFINITY;
  return sys;
}

}  // namespace oblique
