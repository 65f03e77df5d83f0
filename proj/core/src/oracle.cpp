#include "cutcell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cutcell {

namespace {

double wrap_unit(double x) {
  double r = x - std::floor(x);
  // floor can round a tiny negative value up to exactly 1.
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

PiecewiseConstantState advect_and_average(const PiecewiseConstantState& state,
                                          const CutCellMesh& mesh, double shift) {
  if (static_cast<std::size_t>(state.values.size()) != mesh.size()) {
    throw std::invalid_argument("state does not live on this mesh");
  }
  if (!(shift >= 0.0)) throw std::invalid_argument("shift must be non-negative");
  shift = wrap_unit(shift);

  // Breakpoints: the mesh boundaries and the boundaries carried forward by
  // the shift. Between consecutive breakpoints both the target cell and the
  // transported source cell are constant.
  const auto bounds = mesh.boundaries();
  std::vector<double> points = bounds;
  for (double x : bounds) points.push_back(wrap_unit(x + shift));
  points.push_back(0.0);
  points.push_back(1.0);
  std::sort(points.begin(), points.end());
  std::vector<double> merged;
  merged.reserve(points.size());
  for (double p : points) {
    if (merged.empty() || p - merged.back() > kOverlapSnapTolerance) {
      merged.push_back(p);
    } else if (p == 1.0) {
      merged.back() = 1.0;
    }
  }

  Eigen::VectorXd integral = Eigen::VectorXd::Zero(state.values.size());
  Eigen::VectorXd covered = Eigen::VectorXd::Zero(state.values.size());
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double a = merged[i];
    const double b = merged[i + 1];
    const double mid = 0.5 * (a + b);
    const auto target = mesh.cell_index_of(mid);
    const auto source = mesh.cell_index_of(wrap_unit(mid - shift));
    integral(static_cast<Eigen::Index>(target)) +=
        (b - a) * state.values(static_cast<Eigen::Index>(source));
    covered(static_cast<Eigen::Index>(target)) += b - a;
  }

  PiecewiseConstantState out;
  out.time = state.time;
  // Normalized by the summed sub-interval widths, not the stored cell length,
  // so that constant data comes back unchanged up to rounding.
  out.values = integral.cwiseQuotient(covered);
  return out;
}

std::vector<double> exact_solution_samples(const InitialProfile& profile, double beta, double t,
                                           std::span<const double> xs) {
  if (t < 0.0) throw std::invalid_argument("time must be non-negative");
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(evaluate(profile, wrap_unit(x - beta * t)));
  return out;
}

}  // namespace cutcell
