#include "skbounds/report.hpp"

#include <sstream>

namespace skbounds {

Json partition_json(const Partition& partition) {
  Json cells = Json::array();
  for (VertexMask cell : partition.cells()) cells.push_back(vertices_of(cell));
  return cells;
}

Json mmi_json(const MmiResult& result) {
  return Json{{"value", result.value.to_string()},
              {"fundamental", partition_json(result.fundamental)},
              {"minimizer_count", result.all_minimizers.size()}};
}

Json packing_json(const FractionalPacking& packing) {
  Json out = Json::object();
  for (const auto& [edge, value] : packing.entries()) out[format_set(edge)] = value.to_string();
  return out;
}

Json graphical_json(const std::optional<GraphicalBounds>& graphical) {
  if (!graphical) return nullptr;
  return Json{{"ub_theorem2", graphical->ub_theorem2.to_string()},
              {"lower_bound", graphical->lower_bound.to_string()},
              {"ci", graphical->ci.to_string()},
              {"cross_edge_sum", graphical->cross_edge_sum.to_string()}};
}

Json report_json(const AnalysisReport& report) {
  return Json{{"m", report.m},
              {"entropy_total", report.entropy_total.to_string()},
              {"mmi", mmi_json(report.mmi)},
              {"r_co", report.r_co.to_string()},
              {"ub_theorem1", report.ub_theorem1.to_string()},
              {"x_star", packing_json(report.x_star)},
              {"graphical", graphical_json(report.graphical)}};
}

std::string mmi_text(const MmiResult& result, int m) {
  std::ostringstream os;
  os << "I(X_M) = " << result.value << '\n'
     << "P* = " << result.fundamental.to_string() << '\n'
     << "minimizers = " << result.all_minimizers.size() << '\n'
     << "Type S = " << (static_cast<int>(result.fundamental.size()) == m ? "yes" : "no") << '\n';
  return os.str();
}

std::string rco_text(const Rational& r_co) { return "R_CO = " + r_co.to_string() + "\n"; }

std::string ub_text(const Rational& bound, const FractionalPacking& x_star) {
  std::ostringstream os;
  os << "UB(Thm 1) = " << bound << '\n';
  for (const auto& [edge, value] : x_star.entries()) os << "x*" << format_set(edge) << " = " << value << '\n';
  return os.str();
}

std::string graphical_text(const GraphicalBounds& graphical) {
  std::ostringstream os;
  os << "UB(Thm 2) = " << graphical.ub_theorem2 << '\n'
     << "LB(Thm 3) = " << graphical.lower_bound << '\n'
     << "CI = " << graphical.ci << '\n'
     << "cross-edge sum = " << graphical.cross_edge_sum << '\n';
  return os.str();
}

std::string report_text(const AnalysisReport& report) {
  std::ostringstream os;
  os << "m = " << report.m << '\n' << "H(X_M) = " << report.entropy_total << '\n';
  os << mmi_text(report.mmi, report.m);
  os << "C(M) = " << report.sk_capacity << '\n';
  os << rco_text(report.r_co);
  os << ub_text(report.ub_theorem1, report.x_star);
  if (report.graphical) os << graphical_text(*report.graphical);
  for (const auto& w : report.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace skbounds
