#pragma once

#include <span>
#include <vector>

#include "cutcell/mesh.hpp"
#include "cutcell/profile.hpp"
#include "cutcell/stepping.hpp"

namespace cutcell {

/// Snap tolerance used when merging mesh and shifted-mesh breakpoints.
inline constexpr double kOverlapSnapTolerance = 1e-14;

/// Transports the piecewise constant state exactly by `shift` (periodic,
/// reduced modulo 1) and averages the result back onto the mesh cells.
/// The time stamp is left unchanged.
PiecewiseConstantState advect_and_average(const PiecewiseConstantState& state,
                                          const CutCellMesh& mesh, double shift);

/// u(x, t) = u0((x - beta t) mod 1).
std::vector<double> exact_solution_samples(const InitialProfile& profile, double beta, double t,
                                           std::span<const double> xs);

}  // namespace cutcell
