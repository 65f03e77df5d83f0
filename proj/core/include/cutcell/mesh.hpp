#pragma once

#include <cstddef>
#include <vector>

namespace cutcell {

/// Absolute tolerance for matching a requested split coordinate to a
/// background cell boundary.
inline constexpr double kBoundaryMatchTolerance = 1e-12;

struct Cell {
  double x_left;
  double x_right;
  double length;
};

/// Periodic 1D mesh on [0, 1]: N equidistant background cells, one of which
/// is split into a small cut cell k1 of length alpha*h followed by its
/// outflow neighbour k2 of length (1 - alpha)*h.
///
/// Cells are stored left to right and indexed from 0, so the mesh holds
/// N + 1 cells and k2() == k1() + 1. The cell to the left of k1 (the inflow
/// neighbour, "k-1") is found with periodic wrapping.
class CutCellMesh {
 public:
  CutCellMesh(std::size_t n_background, double alpha, double split_left);

  std::size_t n_background() const { return n_background_; }
  std::size_t size() const { return cells_.size(); }
  double h() const { return h_; }
  double alpha() const { return alpha_; }
  double split_left() const { return cells_[k1_].x_left; }

  /// Index of the small cut cell.
  std::size_t k1() const { return k1_; }
  /// Index of the large cut cell, the outflow neighbour of k1.
  std::size_t k2() const { return k1_ + 1; }
  /// Index of the inflow neighbour of k1 (background cell k-1).
  std::size_t inflow_neighbour() const { return upwind(k1_); }

  std::size_t upwind(std::size_t j) const { return j == 0 ? size() - 1 : j - 1; }
  std::size_t downwind(std::size_t j) const { return j + 1 == size() ? 0 : j + 1; }

  const Cell& cell(std::size_t j) const { return cells_[j]; }
  const std::vector<Cell>& cells() const { return cells_; }

  double length(std::size_t j) const { return cells_[j].length; }
  double midpoint(std::size_t j) const {
    return 0.5 * (cells_[j].x_left + cells_[j].x_right);
  }

  /// Sorted cell boundaries, size() + 1 entries from 0 to 1.
  std::vector<double> boundaries() const;

  /// Index j with x in [x_left_j, x_right_j). Requires x in [0, 1).
  std::size_t cell_index_of(double x) const;

 private:
  std::size_t n_background_;
  double h_;
  double alpha_;
  std::size_t k1_;
  std::vector<Cell> cells_;
};

/// Validating factory; throws std::invalid_argument on bad input.
CutCellMesh build_mesh(std::size_t n_background, double alpha, double split_left);

}  // namespace cutcell
