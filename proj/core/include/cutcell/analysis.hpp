#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutcell/assembly.hpp"
#include "cutcell/mesh.hpp"
#include "cutcell/stepping.hpp"

namespace cutcell {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Result of the entrywise nonnegativity test on B. A linear explicit scheme
/// M u' = B u with positive diagonal M is monotone iff every B_ij >= 0.
struct MonotonicityReport {
  bool monotone = true;
  std::vector<MatrixEntry> negative_entries;
  double min_entry = 0.0;
  double tolerance = 0.0;
};

/// Default nonnegativity tolerance, 1e-13 * h.
double default_monotonicity_tolerance(const SchemeMatrices& matrices);

/// Entries below -tolerance are reported as negative. The tolerance is
/// one-sided so that exact zeros (e.g. B[k1][k1] at eta = 1 - alpha/lambda)
/// classify as monotone despite rounding.
MonotonicityReport check_monotonicity(const SchemeMatrices& matrices,
                                      std::optional<double> tolerance = std::nullopt);

struct EtaInterval {
  double lower = 0.0;
  double upper = 1.0;
  /// Set when alpha > lambda: the small cell is not CFL-limited and should
  /// not be stabilized.
  bool empty = false;

  bool contains(double eta, double slack = 0.0) const {
    return eta >= lower - slack && eta <= upper + slack;
  }
};

/// [max(0, 1 - alpha/lambda), 1].
EtaInterval admissible_eta_interval(double alpha, double lambda_cfl);

/// One sign condition on an entry of the ghost-penalty matrix, written as
/// a1*eta1 + a2*eta2 >= rhs (all conditions are scaled by 1/tau).
struct GpConstraint {
  std::string name;
  double a1;
  double a2;
  double rhs;

  double slack(double eta1, double eta2) const { return a1 * eta1 + a2 * eta2 - rhs; }
};

/// Every nontrivial sign condition read off the ghost-penalty matrix rows
/// k-1, k1 and k2.
std::vector<GpConstraint> ghost_penalty_constraints(double alpha, double lambda_cfl);

struct GpFeasibilityCertificate {
  bool feasible = false;
  std::optional<std::pair<double, double>> witness;
  std::vector<std::string> violated_constraints;
};

/// Decides whether some (eta1, eta2) makes the ghost-penalty matrix
/// entrywise nonnegative. Feasible exactly when alpha >= lambda.
GpFeasibilityCertificate ghost_penalty_feasibility(double alpha, double lambda_cfl);

/// Periodic total variation sum_j |u_{j+1} - u_j|, including the wrap term.
double total_variation(const PiecewiseConstantState& state);
double l1_norm(const PiecewiseConstantState& state, const CutCellMesh& mesh);
double mass(const PiecewiseConstantState& state, const CutCellMesh& mesh);
std::pair<double, double> extrema(const PiecewiseConstantState& state);

}  // namespace cutcell
