#pragma once

#include <string>

#include "json.hpp"

#include "skbounds/bounds.hpp"

namespace skbounds {

using Json = nlohmann::ordered_json;

// JSON fragments. Every rational is rendered as an "a/b" (or "a") string.
Json partition_json(const Partition& partition);
Json mmi_json(const MmiResult& result);
Json packing_json(const FractionalPacking& packing);
Json graphical_json(const std::optional<GraphicalBounds>& graphical);

/// Top-level document: m, entropy_total, mmi, r_co, ub_theorem1, x_star, graphical.
Json report_json(const AnalysisReport& report);

// Text fragments, one "name = value" line each.
std::string mmi_text(const MmiResult& result, int m);
std::string rco_text(const Rational& r_co);
std::string ub_text(const Rational& bound, const FractionalPacking& x_star);
std::string graphical_text(const GraphicalBounds& graphical);

std::string report_text(const AnalysisReport& report);

}  // namespace skbounds
