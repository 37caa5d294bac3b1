#pragma once

#include "oblique/kernels.hpp"
#include "oblique/manufactured.hpp"
#include "oblique/physics.hpp"
#include "oblique/quadrature.hpp"

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <variant>

namespace oblique {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

/// Condition estimates above this are treated as a resonance.
inline constexpr double kResonanceCondition = 1e12;

/// A 2n x 2n matrix realising one boundary operator on nodal values.
struct DiscreteOperator {
  std::string name;  // e.g. "S_0", "K_1"
  int domain = 0;
  MatrixC matrix;
  std::shared_ptr<const NodeSet> nodes;
};

/// S, D, NS, TS (log/Cauchy rules). Throws ContractError for ND/TD.
DiscreteOperator assemble_basic(KernelTag tag, int domain, const PhysicsConfig& cfg,
                                std::shared_ptr<const NodeSet> nodes);
/// Normal derivative of the double layer in Maue-regularised form.
DiscreteOperator assemble_ND(int domain, const PhysicsConfig& cfg,
                             std::shared_ptr<const NodeSet> nodes);
/// Tangential derivative of the double layer in regularised form.
DiscreteOperator assemble_TD(int domain, const PhysicsConfig& cfg,
                             std::shared_ptr<const NodeSet> nodes);

/// Same operators with an explicit wavenumber (circle-symbol tests use kappa = 1).
DiscreteOperator assemble_operator(KernelTag tag, double kappa,
                                   std::shared_ptr<const NodeSet> nodes);

/// All six operators of one domain, assembled in a single pass over node pairs.
struct OperatorSet {
  int domain = 0;
  double kappa = 0.0;
  DiscreteOperator S, D, NS, TS, ND, TD;
  const DiscreteOperator& get(KernelTag tag) const;
};
OperatorSet assemble_domain(int domain, double kappa, std::shared_ptr<const NodeSet> nodes);

/// K_j = (NS_j +- 1/2 I)^{-1} ND_j (plus for the exterior, minus for the
/// interior) maps Dirichlet to Neumann traces; L_j = 2 (TD_j - TS_j K_j).
struct Composition {
  DiscreteOperator K;
  DiscreteOperator L;
  double condition = 0.0;  // 1-norm estimate for NS_j +- 1/2 I
};

/// Throws ResonanceError when NS_j +- 1/2 I is numerically singular.
Composition compose(const OperatorSet& ops);
DiscreteOperator compose_K(const OperatorSet& ops);
DiscreteOperator compose_L(const OperatorSet& ops);

/// Everything assembled for one (curve, physics, n).
struct Assembly {
  PhysicsConfig cfg;
  std::shared_ptr<const NodeSet> nodes;
  OperatorSet ops[2];
  Composition comp[2];
};

Assembly assemble(const PhysicsConfig& cfg, const TrigCurve& curve, int n);

/// Right-hand side selector: obliquely incident plane wave or the manufactured problem.
struct PlaneWaveRhs {};
using RhsMode = std::variant<PlaneWaveRhs, SourcePoints>;

enum class SystemForm { Compact, Preconditioned };

/// (D + K) u = b for u = (u0|Gamma, v0|Gamma).
struct BlockSystem {
  SystemForm form = SystemForm::Compact;
  MatrixC d_block;  // D_0 - 1/2 I, used for both diagonal blocks
  MatrixC k11, k12, k21, k22;
  MatrixC lhs;
  VectorC rhs;
  double condition_estimate = 0.0;
  Eigen::PartialPivLU<MatrixC> lu;
};

/// Nodal incident traces / manufactured jumps used by the right-hand side
/// and by trace recovery.
struct BoundaryData {
  VectorC f1, f2, f3, f4;    // manufactured mode
  VectorC e, dn_e, dt_e;     // plane-wave mode
  bool manufactured = false;
};
BoundaryData boundary_data(const Assembly& a, const RhsMode& mode);

BlockSystem assemble_system(const Assembly& a, const RhsMode& mode,
                            SystemForm form = SystemForm::Compact);

}  // namespace oblique
