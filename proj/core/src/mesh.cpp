#include "cutcell/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cutcell {

CutCellMesh::CutCellMesh(std::size_t n_background, double alpha, double split_left)
    : n_background_(n_background), alpha_(alpha) {
  if (n_background < 3) {
    throw std::invalid_argument("mesh needs at least 3 background cells");
  }
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    std::ostringstream msg;
    msg << "volume fraction alpha=" << alpha << " outside (0, 1/2]";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(split_left) || split_left < -kBoundaryMatchTolerance ||
      split_left > 1.0 + kBoundaryMatchTolerance) {
    throw std::invalid_argument("split coordinate must lie in [0, 1]");
  }

  const double n = static_cast<double>(n_background);
  h_ = 1.0 / n;

  const double nearest = std::round(split_left * n);
  if (std::abs(nearest / n - split_left) > kBoundaryMatchTolerance) {
    std::ostringstream msg;
    msg << "split coordinate " << split_left
        << " is not a background cell boundary (h=" << h_ << ")";
    throw std::invalid_argument(msg.str());
  }
  // x = 1 is the same point as x = 0 on the periodic domain.
  const auto k = static_cast<std::size_t>(nearest) % n_background;
  k1_ = k;

  cells_.reserve(n_background + 1);
  for (std::size_t j = 0; j < n_background; ++j) {
    const double left = static_cast<double>(j) / n;
    const double right = (j + 1 == n_background) ? 1.0 : static_cast<double>(j + 1) / n;
    if (j == k) {
      const double cut = left + alpha * h_;
      cells_.push_back({left, cut, alpha * h_});
      cells_.push_back({cut, right, (1.0 - alpha) * h_});
    } else {
      cells_.push_back({left, right, h_});
    }
  }
}

std::vector<double> CutCellMesh::boundaries() const {
  std::vector<double> xs;
  xs.reserve(cells_.size() + 1);
  for (const auto& c : cells_) xs.push_back(c.x_left);
  xs.push_back(cells_.back().x_right);
  return xs;
}

std::size_t CutCellMesh::cell_index_of(double x) const {
  // First cell whose right boundary is strictly greater than x.
  auto it = std::upper_bound(cells_.begin(), cells_.end(), x,
                             [](double value, const Cell& c) { return value < c.x_right; });
  if (it == cells_.end()) return cells_.size() - 1;
  return static_cast<std::size_t>(it - cells_.begin());
}

CutCellMesh build_mesh(std::size_t n_background, double alpha, double split_left) {
  return CutCellMesh(n_background, alpha, split_left);
}

}  // namespace cutcell
