#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "polymix/area_measure.hpp"
#include "polymix/polytope.hpp"
#include "polymix/report.hpp"
#include "polymix/toric.hpp"

namespace polymix {

// File formats. Rationals are "p/q" (or "p") strings so nothing is lost to
// binary floats; integer entries ride as JSON numbers when they fit in 64
// bits and as strings otherwise. All emitters produce canonical field order,
// so equal objects serialize to equal bytes.

nlohmann::ordered_json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const nlohmann::json& j);

nlohmann::ordered_json halfspaces_to_json(const std::vector<Halfspace>& hs, int dim);
std::pair<std::vector<Halfspace>, int> halfspaces_from_json(const nlohmann::json& j);

nlohmann::ordered_json toric_to_json(const ToricData& d);
ToricData toric_from_json(const nlohmann::json& j);

nlohmann::ordered_json newton_body_to_json(const NewtonBody& b);
NewtonBody newton_body_from_json(const nlohmann::json& j);

nlohmann::ordered_json measure_to_json(const MixedAreaMeasure& m);
MixedAreaMeasure measure_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const Report& r);

std::string report_csv_header();
std::string report_to_csv(const Report& r);

}  // namespace polymix
