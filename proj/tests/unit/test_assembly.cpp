#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cutcell/assembly.hpp"
#include "test_support.hpp"

using namespace cutcell;
using cutcell::testing::display_dod;
using cutcell::testing::display_ghost_penalty;
using cutcell::testing::display_unstabilized;

namespace {

const CutCellMesh& experiment_mesh() {
  static const auto mesh = build_mesh(10, 0.001, 0.5);
  return mesh;
}

constexpr AdvectionConfig kExperiment{1.0, 0.4};

// 0-based indices on the experiment mesh.
constexpr Eigen::Index kKm1 = 4;
constexpr Eigen::Index kK1 = 5;
constexpr Eigen::Index kK2 = 6;

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("unstabilized matrix entries") {
  const auto m = assemble_unstabilized(experiment_mesh(), kExperiment);
  const auto& b = m.system;
  CHECK(std::abs(b(kK1, kK1) - (-0.0399)) < 1e-17);
  CHECK(std::abs(b(2, 2) - 0.06) < 1e-16);
  CHECK(std::abs(b(2, 1) - 0.04) < 1e-16);
  // Periodic corner.
  CHECK(std::abs(b(0, 10) - 0.04) < 1e-16);
  CHECK(b(1, 3) == 0.0);
  CHECK(m.dt == doctest::Approx(0.04));
  CHECK_FALSE(m.resolved_eta.has_value());
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    CHECK(m.mass_diagonal(j) == experiment_mesh().length(static_cast<std::size_t>(j)));
  }
}

TEST_CASE("vanishing time step leaves B == M") {
  const AdvectionConfig tiny{1.0, 1e-300};
  const auto m = assemble_unstabilized(experiment_mesh(), tiny);
  const Eigen::MatrixXd mass = m.mass_diagonal.asDiagonal();
  CHECK(max_abs_diff(m.system, mass) < 1e-300);
}

TEST_CASE("ghost penalty entries") {
  const auto& mesh = experiment_mesh();
  const auto base = assemble_unstabilized(mesh, kExperiment);
  CHECK(assemble_ghost_penalty(mesh, kExperiment, 0.0, 0.0).system == base.system);

  const auto half = assemble_ghost_penalty(mesh, kExperiment, 0.0, 0.5);
  CHECK(std::abs(half.system(kK1, kK2) - (-0.02)) < 1e-17);

  const auto full = assemble_ghost_penalty(mesh, kExperiment, 1.0, 1.0);
  CHECK(std::abs(full.system(kK1, kK1) - 0.0401) < 1e-16);
  CHECK(std::abs(full.system(kKm1, kK1) - (-0.04)) < 1e-16);
}

TEST_CASE("DoD entries") {
  const auto& mesh = experiment_mesh();
  const auto base = assemble_unstabilized(mesh, kExperiment);
  CHECK(assemble_dod(mesh, kExperiment, 0.0).system == base.system);

  const auto lower_end = assemble_dod(mesh, kExperiment, 1.0 - 0.001 / 0.4);
  CHECK(std::abs(lower_end.system(kK1, kK1)) < 1e-17);

  const auto one = assemble_dod(mesh, kExperiment, 1.0);
  CHECK(one.system(kK1, kKm1) == 0.0);
  CHECK(std::abs(one.system(kK1, kK1) - 1e-4) < 1e-18);
  CHECK(std::abs(one.system(kK2, kKm1) - 0.04) < 1e-17);
  CHECK(one.system(kK2, kK1) == 0.0);
  CHECK(one.resolved_eta == 1.0);
}

TEST_CASE("DoD eta range is enforced unless forced") {
  const auto& mesh = experiment_mesh();
  CHECK_THROWS_AS(assemble_dod(mesh, kExperiment, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(assemble_dod(mesh, kExperiment, 1.01), std::invalid_argument);
  CHECK_NOTHROW(assemble_dod(mesh, kExperiment, 1.5, EtaRange::Force));
  CHECK_NOTHROW(assemble_dod(mesh, kExperiment, 0.995));
}

TEST_CASE("config validation") {
  const auto& mesh = experiment_mesh();
  CHECK_THROWS_AS(assemble_unstabilized(mesh, {0.0, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_unstabilized(mesh, {1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(assemble_unstabilized(mesh, {1.0, 1.0}), std::invalid_argument);
  const AdvectionConfig fast{2.5, 0.4};
  CHECK(fast.tau(mesh) == 0.4 * mesh.h());
  CHECK(fast.dt(mesh) == doctest::Approx(0.016));
}

TEST_CASE("resolve_eta rules") {
  CHECK(resolve_eta(eta_rule::OneMinusAlphaOverLambda{}, 0.001, 0.4) == doctest::Approx(0.9975));
  CHECK(resolve_eta(eta_rule::OneMinusAlphaOverHalfLambda{}, 0.001, 0.4) ==
        doctest::Approx(0.99875));
  CHECK(resolve_eta(eta_rule::One{}, 0.001, 0.4) == 1.0);
  CHECK(resolve_eta(eta_rule::Fixed{0.3}, 0.001, 0.4) == 0.3);
  CHECK(resolve_eta(eta_rule::OneMinusAlphaOverLambda{}, 0.45, 0.4) == 0.0);
  CHECK(resolve_eta(eta_rule::One{}, 0.45, 0.4) == 0.0);
  CHECK(resolve_eta(eta_rule::OneMinusAlphaOverHalfLambda{}, 0.4, 0.4) == 0.0);
  CHECK(resolve_eta(eta_rule::Fixed{0.3}, 0.45, 0.4) == 0.3);
}

TEST_CASE("assemble dispatches on the stabilization choice") {
  const auto& mesh = experiment_mesh();
  const auto dod = assemble(mesh, kExperiment,
                            stabilization::DomainOfDependence{eta_rule::OneMinusAlphaOverLambda{}});
  REQUIRE(dod.resolved_eta.has_value());
  CHECK(*dod.resolved_eta == doctest::Approx(0.9975));
  const auto gp = assemble(mesh, kExperiment, stabilization::GhostPenalty{0.0, 0.5});
  CHECK(gp.system == assemble_ghost_penalty(mesh, kExperiment, 0.0, 0.5).system);
  const auto none = assemble(mesh, kExperiment, stabilization::None{});
  CHECK(none.system == assemble_unstabilized(mesh, kExperiment).system);
}

TEST_CASE("property: face assembly matches the row formulas, row and column sums") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(3, 40)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const double alpha = testing::uniform(rng, 1e-6, 0.5);
    const double lambda = testing::uniform(rng, 1e-3, 0.999);
    const double beta = testing::uniform(rng, 0.1, 5.0);
    const auto mesh = build_mesh(n, alpha, static_cast<double>(k) / static_cast<double>(n));
    const AdvectionConfig cfg{beta, lambda};
    const double eta = testing::uniform(rng, -1.0, 2.0);
    const double eta1 = testing::uniform(rng, -2.0, 2.0);
    const double eta2 = testing::uniform(rng, -2.0, 2.0);

    const auto none = assemble_unstabilized(mesh, cfg);
    const auto gp = assemble_ghost_penalty(mesh, cfg, eta1, eta2);
    const auto dod = assemble_dod(mesh, cfg, eta, EtaRange::Force);
    const double scale = mesh.h();
    CHECK(max_abs_diff(none.system, display_unstabilized(mesh, lambda)) <= 1e-15 * scale);
    CHECK(max_abs_diff(gp.system, display_ghost_penalty(mesh, lambda, eta1, eta2)) <=
          1e-15 * scale);
    CHECK(max_abs_diff(dod.system, display_dod(mesh, lambda, eta)) <= 1e-15 * scale);

    for (const auto* m : {&none, &gp, &dod}) {
      const Eigen::VectorXd rows = m->system.rowwise().sum();
      const Eigen::VectorXd cols = m->system.colwise().sum().transpose();
      for (Eigen::Index j = 0; j < m->size(); ++j) {
        const double d = m->mass_diagonal(j);
        // Stabilized entries are O(h) while the sum can be O(alpha h).
        CHECK(std::abs(rows(j) - d) <= 1e-13 * std::max(d, 4.0 * scale));
        CHECK(std::abs(cols(j) - d) <= 1e-13 * std::max(d, 4.0 * scale));
      }
    }

    // Locality: stabilization only touches rows and columns k-1, k1, k2.
    const auto km1 = static_cast<Eigen::Index>(mesh.inflow_neighbour());
    const auto k1 = static_cast<Eigen::Index>(mesh.k1());
    const auto k2 = static_cast<Eigen::Index>(mesh.k2());
    auto touched = [&](Eigen::Index i) { return i == km1 || i == k1 || i == k2; };
    for (Eigen::Index i = 0; i < none.size(); ++i) {
      for (Eigen::Index j = 0; j < none.size(); ++j) {
        if (touched(i) || touched(j)) continue;
        CHECK(gp.system(i, j) == none.system(i, j));
        CHECK(dod.system(i, j) == none.system(i, j));
      }
    }
  }
}
