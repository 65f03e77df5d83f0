#include "cutcell/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace cutcell {

double default_monotonicity_tolerance(const SchemeMatrices& matrices) {
  return 1e-13 * matrices.h;
}

MonotonicityReport check_monotonicity(const SchemeMatrices& matrices,
                                      std::optional<double> tolerance) {
  MonotonicityReport report;
  report.tolerance = tolerance.value_or(default_monotonicity_tolerance(matrices));
  const auto& b = matrices.system;
  // + 0.0 turns a -0 minimum into 0.
  report.min_entry = (b.size() > 0 ? b.minCoeff() : 0.0) + 0.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (b(i, j) < -report.tolerance) {
        report.negative_entries.push_back(
            {static_cast<std::size_t>(i), static_cast<std::size_t>(j), b(i, j)});
      }
    }
  }
  report.monotone = report.negative_entries.empty();
  return report;
}

EtaInterval admissible_eta_interval(double alpha, double lambda_cfl) {
  EtaInterval interval;
  interval.lower = std::max(0.0, 1.0 - alpha / lambda_cfl);
  interval.upper = 1.0;
  interval.empty = alpha > lambda_cfl;
  return interval;
}

std::vector<GpConstraint> ghost_penalty_constraints(double alpha, double lambda_cfl) {
  const double inv = 1.0 / lambda_cfl;
  // Entry / tau >= 0 for each stabilized entry, rearranged to a1*eta1 + a2*eta2 >= rhs.
  return {
      {"superdiagonal k-1", -1.0, 0.0, 0.0},             // -tau*eta1
      {"superdiagonal k1", 0.0, -1.0, 0.0},              // -tau*eta2
      {"diagonal k-1", 1.0, 0.0, 1.0 - inv},             // h - tau(1 - eta1)
      {"subdiagonal k1", -1.0, 0.0, -1.0},               // tau(1 - eta1)
      {"diagonal k1", 1.0, 1.0, 1.0 - alpha * inv},      // alpha h - tau + tau(eta1 + eta2)
      {"subdiagonal k2", 0.0, -1.0, -1.0},               // tau(1 - eta2)
      {"diagonal k2", 0.0, 1.0, 1.0 - (1.0 - alpha) * inv},  // (1-alpha)h - tau(1 - eta2)
  };
}

namespace {

constexpr double kFeasibilitySlack = 1e-12;

bool satisfies_all(const std::vector<const GpConstraint*>& set, double e1, double e2) {
  return std::all_of(set.begin(), set.end(), [&](const GpConstraint* c) {
    return c->slack(e1, e2) >= -kFeasibilitySlack;
  });
}

// Two-variable feasibility by vertex enumeration inside a large box, which
// makes every nonempty region bounded so it has a vertex.
std::optional<std::pair<double, double>> find_feasible_point(
    const std::vector<const GpConstraint*>& constraints) {
  static const GpConstraint box[] = {
      {"box", 1.0, 0.0, -1e6}, {"box", -1.0, 0.0, -1e6},
      {"box", 0.0, 1.0, -1e6}, {"box", 0.0, -1.0, -1e6}};
  std::vector<const GpConstraint*> all = constraints;
  for (const auto& c : box) all.push_back(&c);

  if (satisfies_all(all, 0.0, 0.0)) return std::pair{0.0, 0.0};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& p = *all[i];
      const auto& q = *all[j];
      const double det = p.a1 * q.a2 - p.a2 * q.a1;
      if (std::abs(det) < 1e-14) continue;
      const double e1 = (p.rhs * q.a2 - p.a2 * q.rhs) / det;
      const double e2 = (p.a1 * q.rhs - p.rhs * q.a1) / det;
      if (satisfies_all(all, e1, e2)) return std::pair{e1, e2};
    }
  }
  return std::nullopt;
}

}  // namespace

GpFeasibilityCertificate ghost_penalty_feasibility(double alpha, double lambda_cfl) {
  const auto constraints = ghost_penalty_constraints(alpha, lambda_cfl);
  std::vector<const GpConstraint*> all;
  for (const auto& c : constraints) all.push_back(&c);

  GpFeasibilityCertificate cert;
  if (auto point = find_feasible_point(all)) {
    cert.feasible = true;
    cert.witness = point;
    return cert;
  }

  // Infeasible halfplane systems in the plane contain an infeasible subset
  // of at most three members; report the smallest one found.
  const std::size_t n = all.size();
  for (std::size_t size = 1; size <= 3 && cert.violated_constraints.empty(); ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      std::vector<const GpConstraint*> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(all[i]);
      }
      if (!find_feasible_point(subset)) {
        for (const auto* c : subset) cert.violated_constraints.push_back(c->name);
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return cert;
}

double total_variation(const PiecewiseConstantState& state) {
  const auto& u = state.values;
  const Eigen::Index n = u.size();
  double tv = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    tv += std::abs(u((j + 1) % n) - u(j));
  }
  return tv;
}

namespace {

Eigen::VectorXd lengths(const CutCellMesh& mesh) {
  Eigen::VectorXd len(static_cast<Eigen::Index>(mesh.size()));
  for (std::size_t j = 0; j < mesh.size(); ++j) len(static_cast<Eigen::Index>(j)) = mesh.length(j);
  return len;
}

}  // namespace

double l1_norm(const PiecewiseConstantState& state, const CutCellMesh& mesh) {
  return lengths(mesh).dot(state.values.cwiseAbs());
}

double mass(const PiecewiseConstantState& state, const CutCellMesh& mesh) {
  return lengths(mesh).dot(state.values);
}

std::pair<double, double> extrema(const PiecewiseConstantState& state) {
  return {state.values.minCoeff(), state.values.maxCoeff()};
}

}  // namespace cutcell
