#pragma once

// JSON views of group summaries, classification rows, onions and the
// pentagon demo. Requires nlohmann/json.

#include <affico/classify.hpp>
#include <affico/onion.hpp>
#include <affico/pentagon.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace affico {

using nlohmann::json;

inline json group_json(const PointGroup& g) {
  const GroupSummary s = summarize(g);
  json axes = json::object(), orders = json::object();
  for (auto [fold, n] : s.axis_counts) axes[std::to_string(fold)] = n;
  for (auto [ord, n] : s.element_orders) orders[std::to_string(ord)] = n;
  return {{"group", g.name()},
          {"order", s.order},
          {"axes", axes},
          {"element_orders", orders},
          {"improper", s.improper}};
}

inline json faces_json(const FaceCensus& fc) {
  return {{"5", fc.pentagons()}, {"6", fc.hexagons()}, {"other", fc.other()}, {"total", fc.faces.size()}};
}

inline json cage_json(const CageSummary& c) {
  json j{{"count", c.count},
         {"edges", c.edges},
         {"shells", c.shells},
         {"edge_min", c.edge_min},
         {"edge_max", c.edge_max},
         {"edge_ratio", c.edge_min > 0 ? c.edge_max / c.edge_min : 0.0},
         {"kustov_allowable", c.count >= 20 && kustov_allowable(static_cast<long>(c.count))}};
  j["faces"] = c.faces ? faces_json(*c.faces) : json(nullptr);
  return j;
}

inline json row_json(const std::string& start, const ClassifyRow& r, LengthUnit unit) {
  json bands = json::array();
  for (const auto& b : r.bands)
    bands.push_back(
        {{"rmin", b.band.rmin}, {"rmax", b.band.rmax}, {"count", b.band.count}, {"trivalent", b.trivalent}});
  return {{"start", start},
          {"fold", r.fold},
          {"length", format(r.length)},
          {"length_float", r.length.to_double()},
          {"length_unit", to_string(unit)},
          {"generic", r.generic},
          {"actual", r.actual},
          {"nontrivial", r.nontrivial()},
          {"bands", bands},
          {"cage", r.cage ? cage_json(*r.cage) : json(nullptr)}};
}

inline json scan_json(const std::string& start, const std::vector<ClassifyRow>& rows, LengthUnit unit) {
  json out = json::array();
  std::size_t nontrivial = 0, cages = 0;
  for (const auto& r : rows) {
    out.push_back(row_json(start, r, unit));
    if (r.nontrivial()) {
      ++nontrivial;
      if (r.cage) ++cages;
    }
  }
  return {{"start", start},
          {"rows", out},
          {"summary", {{"rows", rows.size()}, {"nontrivial", nontrivial}, {"trivalent_nontrivial", cages}}}};
}

inline json onion_json(const std::string& start, const AffineTranslation& t, const OnionReport& rep) {
  json layers = json::array();
  for (const auto& l : rep.layers) {
    json j{{"depth", l.depth},
           {"z", l.depth + 1},
           {"count", l.size()},
           {"edges", l.graph.edges.size()},
           {"shells", l.shells},
           {"outer_radius", l.outer_radius},
           {"axial_height", l.axial_height},
           {"edge_ratio", l.graph.edge_ratio()},
           {"trivalent", l.graph.trivalent()},
           {"pentagon_orientation", to_string(l.orientation)}};
    j["faces"] = l.faces ? faces_json(*l.faces) : json(nullptr);
    if (rep.family) j["predicted"] = family_formula(*rep.family, l.depth + 1);
    layers.push_back(std::move(j));
  }
  json out{{"start", start},
           {"fold", t.fold},
           {"length", format(t.length)},
           {"length_unit", to_string(t.unit)},
           {"translation_norm", translation_norm(t)},
           {"complete", rep.complete},
           {"layers", layers}};
  out["family"] = rep.family ? json(to_string(*rep.family)) : json(nullptr);
  if (!rep.complete) out["failed_depth"] = rep.failed_depth;
  return out;
}

inline json pentagon_json(const GoldenNumber& lambda, PentagonDirection dir, const PentagonArray& a) {
  return {{"length", format(lambda)},
          {"direction", dir == PentagonDirection::vertex ? "vertex" : "edge"},
          {"actual", a.actual()},
          {"generic", a.generic},
          {"coincidences", a.coincidences()},
          {"nontrivial", a.actual() < a.generic}};
}

}  // namespace affico
