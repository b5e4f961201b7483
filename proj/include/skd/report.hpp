#pragma once

// Report assembly: the JSON schema is stable with top-level keys
// {input, validation, verdict, witnesses, timings}; status and condition
// states serialize as their exact uppercase names.

#include <json.hpp>

#include "skd/verdict.hpp"

namespace skd {

using nlohmann::json;

inline json corner_json(CornerId k) { return json::array({corner_crossing(k), corner_index(k)}); }

inline json curve_witness_json(const CurveWitness& w) {
  json passages = json::array();
  for (const auto& p : w.passages) passages.push_back({{"crossing", p.crossing}, {"axis", p.axis}});
  json arcs = json::array();
  for (const auto& a : w.arcs)
    arcs.push_back({{"region", a.region},
                    {"from_corner", corner_json(a.from_corner)},
                    {"to_corner", corner_json(a.to_corner)}});
  return {{"passages", passages}, {"arcs", arcs}};
}

inline json side_json(const SideClassification& s) {
  return {{"euler", s.euler},
          {"genus", s.genus},
          {"punctures", s.punctures_inside},
          {"crossings", s.crossings_inside},
          {"is_disk", s.is_disk}};
}

inline json cut_circle_json(const Diagram& d, const RegionMap& rm, const CutCircle& c) {
  json routing = json::array();
  for (auto [pi, sf] : c.puncture_subface)
    routing.push_back({{"puncture", pi}, {"subface", sf}});
  if (c.kind == CutKind::EdgePair)
    return {{"kind", "edge_pair"},
            {"edges", json::array({c.edge_a, c.edge_b})},
            {"banks", json::array({c.bank_a, c.bank_b})},
            {"arc_regions",
             json::array({rm.dart_region[c.bank_a], rm.dart_region[d.alpha[c.bank_a]]})},
            {"puncture_routing", routing}};
  return {{"kind", "crossing_loop"},
          {"crossing", c.crossing},
          {"corner_axis", c.corner_axis},
          {"arc_regions",
           json::array({rm.corner_region[make_corner(c.crossing, c.corner_axis)]})},
          {"puncture_routing", routing}};
}

inline json two_cut_witness_json(const Diagram& d, const RegionMap& rm, const TwoCutWitness& w) {
  return {{"circle", cut_circle_json(d, rm, w.circle)},
          {"disk_side", side_json(w.disk_side)},
          {"other_side", side_json(w.other_side)}};
}

inline json validation_json(const ValidationReport& r) {
  return {{"connected", r.connected},
          {"alternating", r.alternating},
          {"has_crossing", r.has_crossing},
          {"surface_is_disk", r.surface_is_disk},
          {"capped_genus", r.capped_genus},
          {"n_boundary", r.n_boundary},
          {"messages", r.messages}};
}

inline json verdict_json(const Verdict& v) {
  json pre = {{"connected", v.preconditions.connected},
              {"alternating", v.preconditions.alternating},
              {"has_crossing", v.preconditions.has_crossing},
              {"reduced", v.preconditions.reduced},
              {"surface_not_disk", v.preconditions.surface_not_disk},
              {"has_boundary", v.preconditions.has_boundary}};
  json conds = {{"i_weakly_prime", cond_state_name(v.conditions.i)},
                {"ii_regions_disk_or_annulus", cond_state_name(v.conditions.ii)},
                {"iii_no_adjacent_annuli", cond_state_name(v.conditions.iii)},
                {"iv_no_bisecting_curve", cond_state_name(v.conditions.iv)}};
  return {{"status", status_name(v.status)},
          {"theorem", theorem_name(v.theorem)},
          {"preconditions", pre},
          {"conditions", conds}};
}

inline json witnesses_json(const Diagram& d, const Verdict& v) {
  json w = json::object();
  if (!v.conditions.i_witness && !v.reduced_failure && !v.conditions.ii_witness &&
      !v.conditions.iii_witness && !v.conditions.iv_witness)
    return w;
  RegionMap rm = trace_regions(d);
  if (v.reduced_failure) {
    w["not_reduced"] = {{"crossing", v.reduced_failure->crossing},
                        {"circle", cut_circle_json(d, rm, v.reduced_failure->circle)},
                        {"disk_side", side_json(v.reduced_failure->disk_side)}};
  }
  if (v.conditions.i_witness)
    w["condition_i"] = two_cut_witness_json(d, rm, *v.conditions.i_witness);
  if (v.conditions.ii_witness) w["condition_ii"] = {{"region", v.conditions.ii_witness->region}};
  if (v.conditions.iii_witness)
    w["condition_iii"] = {{"regions", json::array({v.conditions.iii_witness->r1,
                                                   v.conditions.iii_witness->r2})},
                          {"edge", v.conditions.iii_witness->edge}};
  if (v.conditions.iv_witness) w["condition_iv"] = curve_witness_json(*v.conditions.iv_witness);
  return w;
}

inline json build_report(const std::string& input_name, const Diagram& d, const Verdict& v) {
  json input = {{"name", input_name},
                {"crossings", d.n_crossings},
                {"edges", d.n_edges()},
                {"punctures", (int)d.punctures.size()},
                {"capped_genus", v.validation.capped_genus},
                {"components", (int)trace_link_components(d).size()}};
  json timings = {{"validate_ms", v.timings.validate_ms}, {"reduced_ms", v.timings.reduced_ms},
                  {"i_ms", v.timings.i_ms},               {"ii_ms", v.timings.ii_ms},
                  {"iii_ms", v.timings.iii_ms},           {"iv_ms", v.timings.iv_ms}};
  return {{"input", input},
          {"validation", validation_json(v.validation)},
          {"verdict", verdict_json(v)},
          {"witnesses", witnesses_json(d, v)},
          {"timings", timings}};
}

inline std::string text_report(const std::string& input_name, const Diagram& d, const Verdict& v) {
  std::string out;
  out += "input: " + input_name + " (crossings " + std::to_string(d.n_crossings) + ", genus " +
         std::to_string(v.validation.capped_genus) + ", punctures " +
         std::to_string(d.punctures.size()) + ")\n";
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  out += std::string("preconditions: connected ") + flag(v.preconditions.connected) +
         ", alternating " + flag(v.preconditions.alternating) + ", has-crossing " +
         flag(v.preconditions.has_crossing) + ", reduced " + flag(v.preconditions.reduced) +
         ", surface-not-disk " + flag(v.preconditions.surface_not_disk) + ", has-boundary " +
         flag(v.preconditions.has_boundary) + "\n";
  if (v.reduced_failure)
    out += "  not reduced: nugatory crossing " + std::to_string(v.reduced_failure->crossing) + "\n";
  auto line = [&](const char* name, CondState s, const std::string& extra) {
    out += std::string("condition ") + name + ": " + cond_state_name(s) +
           (extra.empty() ? "" : " (" + extra + ")") + "\n";
  };
  std::string extra_i, extra_ii, extra_iii, extra_iv;
  if (v.conditions.i_witness) {
    const auto& w = *v.conditions.i_witness;
    extra_i = "disk side holds " + std::to_string(w.disk_side.crossings_inside.size()) +
              " crossings; cut " +
              (w.circle.kind == CutKind::EdgePair
                   ? "edges " + std::to_string(w.circle.edge_a) + "," + std::to_string(w.circle.edge_b)
                   : "crossing " + std::to_string(w.circle.crossing));
  }
  if (v.conditions.ii_witness)
    extra_ii = "region " + std::to_string(v.conditions.ii_witness->region) + " has 2+ punctures";
  if (v.conditions.iii_witness)
    extra_iii = "annular regions " + std::to_string(v.conditions.iii_witness->r1) + "," +
                std::to_string(v.conditions.iii_witness->r2) + " share edge " +
                std::to_string(v.conditions.iii_witness->edge);
  if (v.conditions.iv_witness)
    extra_iv = "curve through " + std::to_string(v.conditions.iv_witness->passages.size()) +
               " crossings";
  line("(i) weakly prime", v.conditions.i, extra_i);
  line("(ii) regions disk/annulus", v.conditions.ii, extra_ii);
  line("(iii) no adjacent annuli", v.conditions.iii, extra_iii);
  line("(iv) no bisecting curve", v.conditions.iv, extra_iv);
  out += std::string("verdict [") + theorem_name(v.theorem) + "]: " + status_name(v.status) + "\n";
  return out;
}

}  // namespace skd
