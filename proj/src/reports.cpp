#include "soficlab/reports.hpp"

#include <json.hpp>

namespace soficlab {

namespace {

using nlohmann::json;

char const* orbit_kind_name(HypothesisReport::OrbitStatus::Kind k) {
  switch (k) {
    case HypothesisReport::OrbitStatus::Kind::AmenableProvider:
      return "amenable-provider";
    case HypothesisReport::OrbitStatus::Kind::Finite:
      return "finite";
    case HypothesisReport::OrbitStatus::Kind::DeclaredNonamenable:
      return "declared-nonamenable";
    case HypothesisReport::OrbitStatus::Kind::Unknown:
      return "unknown";
  }
  return "?";
}

char const* tristate_name(TriState t) {
  switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace

std::string defect_report_json(DefectReport const& r) {
  json j;
  j["N"]                   = r.ground_size.str();
  j["identity_violations"] = r.identity_violations;
  j["max_mult_defect"]     = rational_str(r.max_mult_defect);
  j["max_sep_overlap"]     = rational_str(r.max_sep_overlap);
  j["mult"]                = json::array();
  for (auto const& e : r.mult) {
    j["mult"].push_back(
        {{"g", e.g_label}, {"h", e.h_label},
         {"defect", rational_str(e.defect)}});
  }
  j["sep"] = json::array();
  for (auto const& e : r.sep) {
    j["sep"].push_back({{"g", e.g_label}, {"h", e.h_label},
                        {"overlap", rational_str(e.overlap)}});
  }
  return j.dump(2) + "\n";
}

std::string eggbox_report_json(EggboxReport const& r) {
  json j;
  j["size"]       = r.monoid_size;
  j["unit_count"] = r.unit_count;
  j["units_equal_j_class_of_identity"] = r.units_equal_j_class_of_identity;
  j["d_classes"] = json::array();
  for (auto const& d : r.d_classes) {
    j["d_classes"].push_back({{"id", d.d_id},
                              {"size", d.size},
                              {"r_classes", d.r_count},
                              {"l_classes", d.l_count},
                              {"h_classes", d.h_count},
                              {"regular", d.regular},
                              {"contains_units", d.contains_units},
                              {"schutzenberger_order", d.schutz_order},
                              {"schutzenberger_abelian", d.schutz_abelian},
                              {"schutzenberger_element_orders",
                               d.schutz_element_orders}});
  }
  return j.dump(2) + "\n";
}

std::string folner_report_json(GroupPtr const&          group,
                               std::vector<Elem> const& k_set,
                               FolnerSet const&         f) {
  json j;
  j["group"] = group->description();
  j["K"]     = json::array();
  for (auto const& k : k_set) {
    j["K"].push_back(group->label(k));
  }
  j["F_size"]  = f.elements.size();
  j["quality"] = rational_str(f.quality_for(k_set));
  return j.dump(2) + "\n";
}

std::string hypothesis_report_json(HypothesisReport const& r) {
  json j;
  j["units_equal_j_class"]      = tristate_name(r.units_equal_j_class);
  j["unit_group"]               = r.unit_group_desc;
  j["unit_group_sofic_capable"] = r.unit_group_sofic_capable;
  j["all_orbits_amenable"]      = tristate_name(r.all_orbits_amenable);
  j["orbits"]                   = json::array();
  for (auto const& o : r.orbits) {
    j["orbits"].push_back({{"element", o.element_label},
                           {"orbit_id", o.orbit_id},
                           {"quotient", o.quotient_desc},
                           {"status", orbit_kind_name(o.kind)}});
  }
  j["matched"] = json::array();
  for (auto c : r.matched) {
    j["matched"].push_back(condition_name(c));
  }
  if (!r.refusal_reason.empty()) {
    j["refusal_reason"] = r.refusal_reason;
  }
  return j.dump(2) + "\n";
}

std::string provenance_json(ProvenanceLog const& log) {
  json j;
  j["delta"]           = rational_str(log.delta);
  j["K_in_G"]          = log.k_in_g;
  j["K_in_S"]          = log.k_in_s;
  j["K2_in_S"]         = log.k2_in_s;
  j["Gbar"]            = log.gbar_desc;
  if (log.gbar_order.has_value()) {
    j["Gbar_order"] = *log.gbar_order;
  }
  j["F_size"]          = log.f_size;
  j["F_quality"]       = rational_str(log.f_quality);
  j["folner_strategy"] = log.folner_strategy;
  j["P_size"]          = log.p_size;
  j["P_kind"]          = log.p_kind;
  j["P_measured_mult"] = rational_str(log.p_measured_mult);
  j["P_measured_sep"]  = rational_str(log.p_measured_sep);
  j["Y_size"]          = log.y_size;
  j["Z_size"]          = log.z_size;
  j["N"]               = log.ground_size;
  j["zfp_fraction"]    = rational_str(log.zfp_fraction);
  j["good_fraction"]   = rational_str(log.good_fraction);
  return j.dump(2) + "\n";
}

std::string defect_report_text(DefectReport const& r) {
  std::string out;
  out += "ground set: " + r.ground_size.str() + " points\n";
  out += "identity violations: " + std::to_string(r.identity_violations)
         + "\n";
  out += "max mult defect: " + rational_str(r.max_mult_defect) + "\n";
  out += "max sep overlap: " + rational_str(r.max_sep_overlap) + "\n";
  for (auto const& e : r.mult) {
    if (e.defect != 0) {
      out += "  mult(" + e.g_label + "," + e.h_label + ") = "
             + rational_str(e.defect) + "\n";
    }
  }
  for (auto const& e : r.sep) {
    if (e.overlap != 0) {
      out += "  overlap(" + e.g_label + "," + e.h_label + ") = "
             + rational_str(e.overlap) + "\n";
    }
  }
  return out;
}

std::string hypothesis_report_text(HypothesisReport const& r) {
  std::string out;
  out += "units = J-class of 1: "
         + std::string(tristate_name(r.units_equal_j_class)) + "\n";
  out += "unit group: " + r.unit_group_desc
         + (r.unit_group_sofic_capable ? " (sofic-capable)"
                                       : " (no provider)")
         + "\n";
  out += "orbits amenable: "
         + std::string(tristate_name(r.all_orbits_amenable)) + "\n";
  for (auto const& o : r.orbits) {
    out += "  orbit of " + o.element_label + ": " + orbit_kind_name(o.kind)
           + " (quotient " + o.quotient_desc + ")\n";
  }
  out += "matched:";
  for (auto c : r.matched) {
    out += std::string(" ") + condition_name(c);
  }
  out += "\n";
  if (!r.refusal_reason.empty()) {
    out += "refusal reason: " + r.refusal_reason + "\n";
  }
  return out;
}

std::string provenance_text(ProvenanceLog const& log) {
  std::string out;
  out += "delta = " + rational_str(log.delta) + "\n";
  out += "Gbar: " + log.gbar_desc;
  if (log.gbar_order.has_value()) {
    out += " (order " + std::to_string(*log.gbar_order) + ")";
  }
  out += "\n";
  out += "F: " + std::to_string(log.f_size) + " elements, quality "
         + rational_str(log.f_quality) + " (" + log.folner_strategy + ")\n";
  out += "P: " + std::to_string(log.p_size) + " points (" + log.p_kind
         + "), measured mult " + rational_str(log.p_measured_mult)
         + ", sep " + rational_str(log.p_measured_sep) + "\n";
  out += "|Y| = " + std::to_string(log.y_size) + ", |Z| = "
         + std::to_string(log.z_size) + ", N = "
         + std::to_string(log.ground_size) + "\n";
  out += "Z x F x P mass = " + rational_str(log.zfp_fraction)
         + ", good region = " + rational_str(log.good_fraction) + "\n";
  return out;
}

}  // namespace soficlab
