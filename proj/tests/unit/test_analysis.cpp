#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cutcell/analysis.hpp"
#include "cutcell/report_json.hpp"
#include "test_support.hpp"

using namespace cutcell;

namespace {

constexpr AdvectionConfig kExperiment{1.0, 0.4};

const CutCellMesh& experiment_mesh() {
  static const auto mesh = build_mesh(10, 0.001, 0.5);
  return mesh;
}

}  // namespace

TEST_CASE("unstabilized experiment matrix is not monotone") {
  const auto report = check_monotonicity(assemble_unstabilized(experiment_mesh(), kExperiment));
  CHECK_FALSE(report.monotone);
  REQUIRE(report.negative_entries.size() == 1);
  CHECK(report.negative_entries[0].row == 5);
  CHECK(report.negative_entries[0].col == 5);
  CHECK(std::abs(report.negative_entries[0].value - (-0.0399)) < 1e-17);
  CHECK(std::abs(report.min_entry - (-0.0399)) < 1e-17);
  CHECK(report.tolerance == doctest::Approx(1e-14));
}

TEST_CASE("DoD at the lower end of the interval is monotone") {
  const auto report =
      check_monotonicity(assemble_dod(experiment_mesh(), kExperiment, 1.0 - 0.001 / 0.4));
  CHECK(report.monotone);
  CHECK(report.negative_entries.empty());
  CHECK(report.min_entry == 0.0);
  CHECK_FALSE(std::signbit(report.min_entry));
}

TEST_CASE("DoD below the interval is flagged on the k1 diagonal") {
  const double eta = 1.0 - 2.0 * 0.001 / 0.4;
  const auto report = check_monotonicity(assemble_dod(experiment_mesh(), kExperiment, eta));
  CHECK_FALSE(report.monotone);
  REQUIRE(report.negative_entries.size() == 1);
  CHECK(report.negative_entries[0].row == 5);
  CHECK(report.negative_entries[0].col == 5);
  CHECK(std::abs(report.negative_entries[0].value - (-1e-4)) < 1e-16);
}

TEST_CASE("explicit tolerance") {
  const auto m = assemble_dod(experiment_mesh(), kExperiment, 1.0 - 2.0 * 0.001 / 0.4);
  CHECK(check_monotonicity(m, 2e-4).monotone);
  CHECK_FALSE(check_monotonicity(m, 0.0).monotone);
}

TEST_CASE("admissible eta interval") {
  const auto a = admissible_eta_interval(0.001, 0.4);
  CHECK(a.lower == doctest::Approx(0.9975));
  CHECK(a.upper == 1.0);
  CHECK_FALSE(a.empty);

  const auto b = admissible_eta_interval(0.4, 0.4);
  CHECK(b.lower == 0.0);
  CHECK_FALSE(b.empty);

  const auto c = admissible_eta_interval(0.45, 0.4);
  CHECK(c.empty);
  CHECK(c.lower == 0.0);
}

TEST_CASE("ghost-penalty feasibility") {
  const auto infeasible = ghost_penalty_feasibility(0.001, 0.4);
  CHECK_FALSE(infeasible.feasible);
  CHECK_FALSE(infeasible.witness.has_value());
  const std::vector<std::string> expected{"superdiagonal k-1", "superdiagonal k1", "diagonal k1"};
  CHECK(infeasible.violated_constraints == expected);

  for (double alpha : {0.4, 0.45}) {
    const auto ok = ghost_penalty_feasibility(alpha, 0.4);
    CHECK(ok.feasible);
    REQUIRE(ok.witness.has_value());
    CHECK(ok.witness->first == 0.0);
    CHECK(ok.witness->second == 0.0);
    CHECK(ok.violated_constraints.empty());
  }
}

TEST_CASE("ghost-penalty constraints match the assembled matrix signs") {
  // Each constraint's slack, times tau, is the corresponding matrix entry.
  std::mt19937_64 rng(3);
  const auto& mesh = experiment_mesh();
  const auto km1 = static_cast<Eigen::Index>(mesh.inflow_neighbour());
  const auto k1 = static_cast<Eigen::Index>(mesh.k1());
  const auto k2 = static_cast<Eigen::Index>(mesh.k2());
  const std::pair<Eigen::Index, Eigen::Index> where[] = {
      {km1, k1}, {k1, k2}, {km1, km1}, {k1, km1}, {k1, k1}, {k2, k1}, {k2, k2}};
  for (int trial = 0; trial < 100; ++trial) {
    const double e1 = testing::uniform(rng, -2, 2);
    const double e2 = testing::uniform(rng, -2, 2);
    const auto b = assemble_ghost_penalty(mesh, kExperiment, e1, e2).system;
    const auto constraints = ghost_penalty_constraints(0.001, 0.4);
    REQUIRE(constraints.size() == 7);
    const double tau = 0.04;
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      CHECK(constraints[c].slack(e1, e2) * tau ==
            doctest::Approx(b(where[c].first, where[c].second)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("solution functionals") {
  const auto& mesh = experiment_mesh();
  PiecewiseConstantState step{Eigen::VectorXd::Zero(11), 0.0};
  step.values.segment(1, 4).setOnes();
  CHECK(total_variation(step) == 2.0);
  CHECK(std::abs(mass(step, mesh) - 0.4) < 1e-15);
  CHECK(std::abs(l1_norm(step, mesh) - 0.4) < 1e-15);

  PiecewiseConstantState c{Eigen::VectorXd::Constant(11, -3.0), 0.0};
  CHECK(total_variation(c) == 0.0);
  CHECK(std::abs(l1_norm(c, mesh) - 3.0) < 1e-14);
  CHECK(std::abs(mass(c, mesh) + 3.0) < 1e-14);
  CHECK(extrema(c) == std::pair{-3.0, -3.0});

  PiecewiseConstantState three{Eigen::Vector3d(0.0, 1.0, 0.5), 0.0};
  CHECK(total_variation(three) == 2.0);
  CHECK(extrema(three) == std::pair{0.0, 1.0});
}

TEST_CASE("property: L1 contraction over the whole admissible interval") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const double lambda = testing::uniform(rng, 0.01, 0.5);
    const double alpha = testing::uniform(rng, 1e-4, 1.0) * lambda;
    const double eta = testing::uniform(rng, admissible_eta_interval(alpha, lambda).lower, 1.0);
    const auto mesh = build_mesh(8, alpha, 0.5);
    const auto m = assemble_dod(mesh, {1.0, lambda}, eta);
    PiecewiseConstantState u{testing::random_values(rng, 9), 0.0};
    for (int n = 0; n < 10; ++n) {
      const auto next = step(u, m);
      CHECK(l1_norm(next, mesh) <= l1_norm(u, mesh) + 1e-12);
      u = next;
    }
  }
}

namespace {

// TV is a seminorm whose unit ball has the periodic block indicators as
// extreme points, so a linear constant-preserving scheme is TVD iff no
// block indicator gains total variation in one step.
double worst_block_tv_gain(const SchemeMatrices& m) {
  const Eigen::Index n = m.size();
  double worst = -1.0;
  for (Eigen::Index start = 0; start < n; ++start) {
    for (Eigen::Index len = 1; len < n; ++len) {
      PiecewiseConstantState u{Eigen::VectorXd::Zero(n), 0.0};
      for (Eigen::Index t = 0; t < len; ++t) u.values((start + t) % n) = 1.0;
      worst = std::max(worst, total_variation(step(u, m)) - 2.0);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("property: TVD for eta in [1 - alpha/lambda, 1 - alpha]") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const double lambda = testing::uniform(rng, 0.01, 0.5);
    const double alpha = testing::uniform(rng, 1e-4, 1.0) * lambda;
    const double lower = admissible_eta_interval(alpha, lambda).lower;
    const double eta = trial % 3 == 0 ? 1.0 - alpha : testing::uniform(rng, lower, 1.0 - alpha);
    const auto mesh = build_mesh(8, alpha, 0.5);
    const auto m = assemble_dod(mesh, {1.0, lambda}, eta);
    CHECK(worst_block_tv_gain(m) <= 1e-12);
    PiecewiseConstantState u{testing::random_values(rng, 9), 0.0};
    for (int n = 0; n < 10; ++n) {
      const auto next = step(u, m);
      CHECK(total_variation(next) <= total_variation(u) + 1e-12);
      u = next;
    }
  }
}

TEST_CASE("monotone but not TVD: eta = 1 on an isolated inflow cell") {
  // u = indicator of cell k-1. With eta = 1, k1 stays 0 while k2 receives
  // lambda/(1-alpha) from k-1, a dip that adds 2 lambda alpha/(1-alpha).
  const double alpha = 0.001;
  const double lambda = 0.4;
  const auto& mesh = experiment_mesh();
  const auto m = assemble_dod(mesh, kExperiment, 1.0);
  CHECK(check_monotonicity(m).monotone);
  PiecewiseConstantState u{Eigen::VectorXd::Zero(11), 0.0};
  u.values(4) = 1.0;
  const double gain = total_variation(step(u, m)) - total_variation(u);
  CHECK(gain == doctest::Approx(2.0 * lambda * alpha / (1.0 - alpha)).epsilon(1e-10));
  CHECK(worst_block_tv_gain(assemble_dod(mesh, kExperiment, 1.0 - alpha + 1e-6)) > 0.0);
}

TEST_CASE("report JSON shape") {
  const auto report = check_monotonicity(assemble_unstabilized(experiment_mesh(), kExperiment));
  const auto text = to_json(report);
  CHECK(text.find("\"verdict\": false") != std::string::npos);
  CHECK(text.find("\"negative_entries\"") != std::string::npos);
  const auto back = monotonicity_report_from_json(text);
  CHECK(back.monotone == report.monotone);
  CHECK(back.min_entry == report.min_entry);
  CHECK(back.tolerance == report.tolerance);
  REQUIRE(back.negative_entries.size() == 1);
  CHECK(back.negative_entries[0].row == 5);
  // Serialized indices are 1-based.
  CHECK(text.find("6,") != std::string::npos);

  const auto cert = ghost_penalty_feasibility(0.001, 0.4);
  const auto cert_back = feasibility_certificate_from_json(to_json(cert));
  CHECK(cert_back.feasible == cert.feasible);
  CHECK(cert_back.violated_constraints == cert.violated_constraints);
  CHECK_FALSE(cert_back.witness.has_value());
  const auto ok_back = feasibility_certificate_from_json(to_json(ghost_penalty_feasibility(0.45, 0.4)));
  CHECK(ok_back.witness == std::optional{std::pair{0.0, 0.0}});
}
