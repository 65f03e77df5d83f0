#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cutcell/assembly.hpp"
#include "cutcell/mesh.hpp"
#include "cutcell/profile.hpp"

namespace cutcell {

/// Piecewise constant solution: one value per mesh cell at time t.
struct PiecewiseConstantState {
  Eigen::VectorXd values;
  double time = 0.0;
};

/// One explicit Euler step: u' = M^{-1} B u, t' = t + dt.
PiecewiseConstantState step(const PiecewiseConstantState& state, const SchemeMatrices& matrices);

/// New values on (k1, k2) after one DoD step, written out in closed form.
/// Valid in the regime alpha < lambda < 1/2.
std::pair<double, double> cut_cell_update_closed_form(double u_inflow, double u_k1, double u_k2,
                                                      double alpha, double lambda_cfl, double eta);

struct StepDiagnostics {
  double time;
  double mass;
  double total_variation;
  double min;
  double max;
};

struct RunOptions {
  bool record_diagnostics = false;
};

struct RunResult {
  /// States at t^0, ..., t^{n_steps}.
  std::vector<PiecewiseConstantState> states;
  /// One entry per stored state when recording is enabled, otherwise empty.
  std::vector<StepDiagnostics> diagnostics;
};

/// Repeated step(); throws std::invalid_argument when n_steps == 0.
RunResult run(const PiecewiseConstantState& initial, const SchemeMatrices& matrices,
              std::size_t n_steps, const CutCellMesh& mesh, RunOptions options = {});

/// Exact cell averages of the profile on the mesh (samples are copied).
PiecewiseConstantState project_initial_data(const CutCellMesh& mesh,
                                            const InitialProfile& profile);

}  // namespace cutcell
