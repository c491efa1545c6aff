#ifndef SOFICLAB_REPORTS_HPP_
#define SOFICLAB_REPORTS_HPP_

#include <string>

#include "soficlab/builder.hpp"
#include "soficlab/folner.hpp"
#include "soficlab/green.hpp"
#include "soficlab/witness.hpp"

namespace soficlab {

// Canonical JSON renderings (rationals as "p/q" strings). The same inputs
// always produce the same bytes.
std::string defect_report_json(DefectReport const& r);
std::string eggbox_report_json(EggboxReport const& r);
std::string folner_report_json(GroupPtr const&          group,
                               std::vector<Elem> const& k_set,
                               FolnerSet const&         f);
std::string hypothesis_report_json(HypothesisReport const& r);
std::string provenance_json(ProvenanceLog const& log);

std::string defect_report_text(DefectReport const& r);
std::string hypothesis_report_text(HypothesisReport const& r);
std::string provenance_text(ProvenanceLog const& log);

}  // namespace soficlab
#endif  // SOFICLAB_REPORTS_HPP_
