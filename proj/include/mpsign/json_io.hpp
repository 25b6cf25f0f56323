#pragma once

// JSON serialization of the documented external schemas: class data,
// parameters, enhanced bundles, packet distributions, and suite reports.
// Keys keep insertion order so that reports are byte-stable.

#include <json.hpp>

#include "mpsign/endoscopy.hpp"
#include "mpsign/harness.hpp"

namespace mpsign {

using Json = nlohmann::ordered_json;

// class data: {"field": "...", "factors": [{"base": ..., "top": {...},
// "x": [...], "c": [...]}]}; stable data omit "c"
Json sp_datum_to_json(const SpClassDatum& d);
Json so_datum_to_json(const SOClassDatum& d);
Json stable_datum_to_json(const StableClassDatum& d);
SpClassDatum sp_datum_from_json(const Json& j);
SOClassDatum so_datum_from_json(const Json& j);
StableClassDatum stable_datum_from_json(const Json& j);

// parameters: {"field": ..., "summands": [{"kind": "CharSa", "d": "u",
// "a": 2, "m": 1}, ...]}
Json parameter_to_json(const MpParameter& phi);
MpParameter parameter_from_json(const Json& j);
Json summand_to_json(const SimpleSummand& s, int multiplicity);
WeightedSummand summand_from_json(const LocalField& F, const Json& j);

Json character_to_json(const GroupCharacter& chi);
GroupCharacter character_from_json(const Json& j);

// enhanced bundle: parameter + character sign vector + psi scale
Json enhanced_to_json(const EnhancedParameter& e);

Json distribution_to_json(const FormalPacketDistribution& d);
FormalPacketDistribution distribution_from_json(const Json& j);

Json case_report_to_json(const harness::CaseReport& r);
Json suite_report_to_json(const harness::SuiteReport& r);
Json suite_reports_to_json(const std::vector<harness::SuiteReport>& rs);

// square-class token: "u"/"p"/"up" over odd p, or any rational string
SquareClass square_class_from_token(const LocalField& F, const std::string& token);

} // namespace mpsign
