#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutcell/mesh.hpp"
#include "cutcell/stepping.hpp"

namespace cutcell {

/// One row of a solution snapshot CSV: `x_left,x_right,u`.
struct SnapshotRow {
  double x_left;
  double x_right;
  double u;
};

std::vector<SnapshotRow> snapshot_rows(const PiecewiseConstantState& state,
                                       const CutCellMesh& mesh);

/// Header line followed by one row per cell, 17 significant digits, LF only.
void write_snapshot(std::ostream& out, const std::vector<SnapshotRow>& rows);
std::string format_snapshot(const std::vector<SnapshotRow>& rows);

/// Throws std::runtime_error on a malformed header or row.
std::vector<SnapshotRow> read_snapshot(std::istream& in);

}  // namespace cutcell
