#pragma once

#include <string>

#include "cutcell/analysis.hpp"

namespace cutcell {

// JSON shapes (cell indices are 1-based, left to right, as in the matrix
// displays of the scheme):
//
//   MonotonicityReport:
//     {"verdict": bool, "min_entry": number,
//      "negative_entries": [[row, col, value], ...], "tolerance": number}
//
//   GpFeasibilityCertificate:
//     {"feasible": bool, "witness": [eta1, eta2] | null,
//      "violated_constraints": [name, ...]}
//
//   EtaInterval:
//     {"lower": number, "upper": number, "empty": bool}

std::string to_json(const MonotonicityReport& report, int indent = 2);
std::string to_json(const GpFeasibilityCertificate& cert, int indent = 2);
std::string to_json(const EtaInterval& interval, int indent = 2);

MonotonicityReport monotonicity_report_from_json(const std::string& text);
GpFeasibilityCertificate feasibility_certificate_from_json(const std::string& text);

}  // namespace cutcell
