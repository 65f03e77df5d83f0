#pragma once

#include <optional>
#include <variant>

#include <Eigen/Dense>

#include "cutcell/mesh.hpp"

namespace cutcell {

/// Constant velocity beta > 0 and CFL number lambda in (0, 1). The time step
/// is never given directly: dt = lambda * h / beta.
struct AdvectionConfig {
  double beta = 1.0;
  double lambda_cfl = 0.4;

  /// Throws std::invalid_argument if beta <= 0 or lambda outside (0, 1).
  void validate() const;

  double dt(const CutCellMesh& mesh) const { return lambda_cfl * mesh.h() / beta; }
  /// tau = beta * dt, evaluated as lambda * h so it is exact by construction.
  double tau(const CutCellMesh& mesh) const { return lambda_cfl * mesh.h(); }
};

namespace eta_rule {
struct Fixed {
  double value;
};
/// 1 - alpha/lambda: exact advect-and-average on the cut pair.
struct OneMinusAlphaOverLambda {};
/// 1 - alpha/(2 lambda).
struct OneMinusAlphaOverHalfLambda {};
/// eta = 1: k1 keeps its value, information skips over it.
struct One {};
}  // namespace eta_rule

using EtaRule = std::variant<eta_rule::Fixed, eta_rule::OneMinusAlphaOverLambda,
                             eta_rule::OneMinusAlphaOverHalfLambda, eta_rule::One>;

/// Rule-based choices return 0 (no stabilization) when alpha >= lambda.
double resolve_eta(const EtaRule& rule, double alpha, double lambda_cfl);

namespace stabilization {
struct None {};
struct GhostPenalty {
  double eta1 = 0.0;
  double eta2 = 0.0;
};
struct DomainOfDependence {
  EtaRule rule = eta_rule::OneMinusAlphaOverHalfLambda{};
};
}  // namespace stabilization

using StabilizationSpec = std::variant<stabilization::None, stabilization::GhostPenalty,
                                       stabilization::DomainOfDependence>;

/// Whether a DoD penalty outside [0, 1] is accepted.
enum class EtaRange { Enforce, Force };

/// M (diagonal, cell lengths) and B = M - dt * A_total for explicit Euler.
struct SchemeMatrices {
  Eigen::VectorXd mass_diagonal;
  Eigen::MatrixXd system;
  std::optional<double> resolved_eta;
  double dt = 0.0;
  double h = 0.0;

  Eigen::Index size() const { return mass_diagonal.size(); }
};

SchemeMatrices assemble_unstabilized(const CutCellMesh& mesh, const AdvectionConfig& cfg);

SchemeMatrices assemble_ghost_penalty(const CutCellMesh& mesh, const AdvectionConfig& cfg,
                                      double eta1, double eta2);

/// Throws std::invalid_argument for eta outside [0, 1] unless range is Force.
SchemeMatrices assemble_dod(const CutCellMesh& mesh, const AdvectionConfig& cfg, double eta,
                            EtaRange range = EtaRange::Enforce);

SchemeMatrices assemble(const CutCellMesh& mesh, const AdvectionConfig& cfg,
                        const StabilizationSpec& stab, EtaRange range = EtaRange::Enforce);

}  // namespace cutcell
