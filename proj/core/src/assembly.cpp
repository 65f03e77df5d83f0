#include "cutcell/assembly.hpp"

#include <sstream>
#include <stdexcept>

namespace cutcell {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Faces are named by the cell on their left: face f separates cell f from
// its downwind neighbour (periodic).
struct Face {
  std::size_t left;
  std::size_t right;
};

Face face_right_of(const CutCellMesh& mesh, std::size_t cell) {
  return {cell, mesh.downwind(cell)};
}

// Operator scaled by 1/beta: B = M - tau * A_hat.
class OperatorBuilder {
 public:
  explicit OperatorBuilder(const CutCellMesh& mesh)
      : mesh_(mesh), a_hat_(Eigen::MatrixXd::Zero(mesh.size(), mesh.size())) {}

  // sum_f u(x_f^-) [w]_f : the upwind trace is the left cell for beta > 0.
  void add_upwind() {
    for (std::size_t j = 0; j < mesh_.size(); ++j) {
      const Face f = face_right_of(mesh_, j);
      a_hat_(f.left, f.left) += 1.0;
      a_hat_(f.right, f.left) -= 1.0;
    }
  }

  // coeff * [u]_{trial} [w]_{test}
  void add_jump_coupling(Face trial, Face test, double coeff) {
    a_hat_(test.left, trial.left) += coeff;
    a_hat_(test.left, trial.right) -= coeff;
    a_hat_(test.right, trial.left) -= coeff;
    a_hat_(test.right, trial.right) += coeff;
  }

  SchemeMatrices finish(const AdvectionConfig& cfg) const {
    SchemeMatrices out;
    out.mass_diagonal.resize(static_cast<Eigen::Index>(mesh_.size()));
    for (std::size_t j = 0; j < mesh_.size(); ++j) {
      out.mass_diagonal(static_cast<Eigen::Index>(j)) = mesh_.length(j);
    }
    const double tau = cfg.tau(mesh_);
    out.system = -tau * a_hat_;
    out.system.diagonal() += out.mass_diagonal;
    out.dt = cfg.dt(mesh_);
    out.h = mesh_.h();
    return out;
  }

 private:
  const CutCellMesh& mesh_;
  Eigen::MatrixXd a_hat_;
};

}  // namespace

void AdvectionConfig::validate() const {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("velocity beta must be positive");
  }
  if (!(lambda_cfl > 0.0 && lambda_cfl < 1.0)) {
    std::ostringstream msg;
    msg << "CFL number lambda=" << lambda_cfl << " outside (0, 1)";
    throw std::invalid_argument(msg.str());
  }
}

double resolve_eta(const EtaRule& rule, double alpha, double lambda_cfl) {
  if (const auto* fixed = std::get_if<eta_rule::Fixed>(&rule)) return fixed->value;
  if (alpha >= lambda_cfl) return 0.0;
  return std::visit(overloaded{
                        [](const eta_rule::Fixed& f) { return f.value; },
                        [&](const eta_rule::OneMinusAlphaOverLambda&) {
                          return 1.0 - alpha / lambda_cfl;
                        },
                        [&](const eta_rule::OneMinusAlphaOverHalfLambda&) {
                          return 1.0 - alpha / (2.0 * lambda_cfl);
                        },
                        [](const eta_rule::One&) { return 1.0; },
                    },
                    rule);
}

SchemeMatrices assemble_unstabilized(const CutCellMesh& mesh, const AdvectionConfig& cfg) {
  cfg.validate();
  OperatorBuilder builder(mesh);
  builder.add_upwind();
  return builder.finish(cfg);
}

SchemeMatrices assemble_ghost_penalty(const CutCellMesh& mesh, const AdvectionConfig& cfg,
                                      double eta1, double eta2) {
  cfg.validate();
  OperatorBuilder builder(mesh);
  builder.add_upwind();
  const Face inflow = face_right_of(mesh, mesh.inflow_neighbour());
  const Face cut = face_right_of(mesh, mesh.k1());
  // Negative coefficient: B_GP picks up +tau*eta on the diagonals and
  // -tau*eta on the superdiagonals of rows k-1 and k1.
  builder.add_jump_coupling(inflow, inflow, -eta1);
  builder.add_jump_coupling(cut, cut, -eta2);
  return builder.finish(cfg);
}

SchemeMatrices assemble_dod(const CutCellMesh& mesh, const AdvectionConfig& cfg, double eta,
                            EtaRange range) {
  cfg.validate();
  if (range == EtaRange::Enforce && !(eta >= 0.0 && eta <= 1.0)) {
    std::ostringstream msg;
    msg << "DoD penalty eta=" << eta << " outside [0, 1]";
    throw std::invalid_argument(msg.str());
  }
  OperatorBuilder builder(mesh);
  builder.add_upwind();
  // Jump of the solution across the inflow face of k1, tested against the
  // jump of the test function across the cut face.
  builder.add_jump_coupling(face_right_of(mesh, mesh.inflow_neighbour()),
                            face_right_of(mesh, mesh.k1()), eta);
  auto out = builder.finish(cfg);
  out.resolved_eta = eta;
  return out;
}

SchemeMatrices assemble(const CutCellMesh& mesh, const AdvectionConfig& cfg,
                        const StabilizationSpec& stab, EtaRange range) {
  return std::visit(
      overloaded{
          [&](const stabilization::None&) { return assemble_unstabilized(mesh, cfg); },
          [&](const stabilization::GhostPenalty& gp) {
            return assemble_ghost_penalty(mesh, cfg, gp.eta1, gp.eta2);
          },
          [&](const stabilization::DomainOfDependence& dod) {
            const double eta = resolve_eta(dod.rule, mesh.alpha(), cfg.lambda_cfl);
            return assemble_dod(mesh, cfg, eta, range);
          },
      },
      stab);
}

}  // namespace cutcell
