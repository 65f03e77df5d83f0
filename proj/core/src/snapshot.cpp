#include "cutcell/snapshot.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cutcell {

namespace {

constexpr const char* kHeader = "x_left,x_right,u";

void append_real(std::string& line, double v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  line.append(buf, static_cast<std::size_t>(n));
}

double parse_field(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("snapshot line " + std::to_string(line_no) + ": bad number '" +
                             std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<SnapshotRow> snapshot_rows(const PiecewiseConstantState& state,
                                       const CutCellMesh& mesh) {
  std::vector<SnapshotRow> rows;
  rows.reserve(mesh.size());
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const auto& c = mesh.cell(j);
    rows.push_back({c.x_left, c.x_right, state.values(static_cast<Eigen::Index>(j))});
  }
  return rows;
}

std::string format_snapshot(const std::vector<SnapshotRow>& rows) {
  std::string text = kHeader;
  text += '\n';
  for (const auto& r : rows) {
    append_real(text, r.x_left);
    text += ',';
    append_real(text, r.x_right);
    text += ',';
    append_real(text, r.u);
    text += '\n';
  }
  return text;
}

void write_snapshot(std::ostream& out, const std::vector<SnapshotRow>& rows) {
  out << format_snapshot(rows);
}

std::vector<SnapshotRow> read_snapshot(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw std::runtime_error("snapshot header must be '" + std::string(kHeader) + "'");
  }
  std::vector<SnapshotRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view view(line);
    const auto c1 = view.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos || view.find(',', c2 + 1) != std::string_view::npos) {
      throw std::runtime_error("snapshot line " + std::to_string(line_no) +
                               ": expected three fields");
    }
    rows.push_back({parse_field(view.substr(0, c1), line_no),
                    parse_field(view.substr(c1 + 1, c2 - c1 - 1), line_no),
                    parse_field(view.substr(c2 + 1), line_no)});
  }
  return rows;
}

}  // namespace cutcell
