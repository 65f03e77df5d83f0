#include "cutcell/report_json.hpp"

#include <json.hpp>

namespace cutcell {

using nlohmann::json;

namespace {

json to_value(const MonotonicityReport& r) {
  json entries = json::array();
  for (const auto& e : r.negative_entries) {
    entries.push_back(json::array({e.row + 1, e.col + 1, e.value}));
  }
  return {{"verdict", r.monotone},
          {"min_entry", r.min_entry},
          {"negative_entries", entries},
          {"tolerance", r.tolerance}};
}

json to_value(const GpFeasibilityCertificate& c) {
  json witness = nullptr;
  if (c.witness) witness = json::array({c.witness->first, c.witness->second});
  return {{"feasible", c.feasible},
          {"witness", witness},
          {"violated_constraints", c.violated_constraints}};
}

}  // namespace

std::string to_json(const MonotonicityReport& report, int indent) {
  return to_value(report).dump(indent);
}

std::string to_json(const GpFeasibilityCertificate& cert, int indent) {
  return to_value(cert).dump(indent);
}

std::string to_json(const EtaInterval& interval, int indent) {
  return json{{"lower", interval.lower}, {"upper", interval.upper}, {"empty", interval.empty}}
      .dump(indent);
}

MonotonicityReport monotonicity_report_from_json(const std::string& text) {
  const auto j = json::parse(text);
  MonotonicityReport r;
  r.monotone = j.at("verdict").get<bool>();
  r.min_entry = j.at("min_entry").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  for (const auto& e : j.at("negative_entries")) {
    r.negative_entries.push_back({e.at(0).get<std::size_t>() - 1,
                                  e.at(1).get<std::size_t>() - 1, e.at(2).get<double>()});
  }
  return r;
}

GpFeasibilityCertificate feasibility_certificate_from_json(const std::string& text) {
  const auto j = json::parse(text);
  GpFeasibilityCertificate c;
  c.feasible = j.at("feasible").get<bool>();
  if (!j.at("witness").is_null()) {
    c.witness = std::pair{j["witness"].at(0).get<double>(), j["witness"].at(1).get<double>()};
  }
  c.violated_constraints = j.at("violated_constraints").get<std::vector<std::string>>();
  return c;
}

}  // namespace cutcell
