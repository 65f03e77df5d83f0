#include "cutcell/stepping.hpp"

#include <stdexcept>

#include "cutcell/analysis.hpp"

namespace cutcell {

PiecewiseConstantState step(const PiecewiseConstantState& state, const SchemeMatrices& matrices) {
  if (state.values.size() != matrices.size()) {
    throw std::invalid_argument("state and scheme matrices have different sizes");
  }
  PiecewiseConstantState next;
  next.values = (matrices.system * state.values).cwiseQuotient(matrices.mass_diagonal);
  next.time = state.time + matrices.dt;
  return next;
}

std::pair<double, double> cut_cell_update_closed_form(double u_inflow, double u_k1, double u_k2,
                                                      double alpha, double lambda_cfl,
                                                      double eta) {
  const double inflow_jump = u_k1 - u_inflow;
  const double k1 = u_k1 - (lambda_cfl / alpha) * (1.0 - eta) * inflow_jump;
  const double ratio = lambda_cfl / (1.0 - alpha);
  const double k2 = u_k2 - ratio * (u_k2 - u_k1) - ratio * eta * inflow_jump;
  return {k1, k2};
}

namespace {

StepDiagnostics diagnose(const PiecewiseConstantState& s, const CutCellMesh& mesh) {
  const auto [lo, hi] = extrema(s);
  return {s.time, mass(s, mesh), total_variation(s), lo, hi};
}

}  // namespace

RunResult run(const PiecewiseConstantState& initial, const SchemeMatrices& matrices,
              std::size_t n_steps, const CutCellMesh& mesh, RunOptions options) {
  if (n_steps == 0) throw std::invalid_argument("run needs at least one step");
  RunResult result;
  result.states.reserve(n_steps + 1);
  result.states.push_back(initial);
  for (std::size_t n = 0; n < n_steps; ++n) {
    result.states.push_back(step(result.states.back(), matrices));
  }
  if (options.record_diagnostics) {
    result.diagnostics.reserve(result.states.size());
    for (const auto& s : result.states) result.diagnostics.push_back(diagnose(s, mesh));
  }
  return result;
}

PiecewiseConstantState project_initial_data(const CutCellMesh& mesh,
                                            const InitialProfile& profile) {
  PiecewiseConstantState state;
  const auto n = static_cast<Eigen::Index>(mesh.size());
  if (const auto* samples = std::get_if<profile::Samples>(&profile)) {
    if (samples->values.size() != mesh.size()) {
      throw std::invalid_argument("sample profile size does not match the mesh");
    }
    state.values = Eigen::Map<const Eigen::VectorXd>(samples->values.data(), n);
    return state;
  }
  state.values.resize(n);
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const auto& c = mesh.cell(j);
    state.values(static_cast<Eigen::Index>(j)) = interval_average(profile, c.x_left, c.x_right);
  }
  return state;
}

}  // namespace cutcell
