#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gonality/engine.hpp"

namespace gonality {

using Json = nlohmann::ordered_json;

/// Pretty polynomial-in-zeta form of an element, e.g. "zeta^2 - 2".
std::string element_str(const CyclotomicElement& e);

Json element_json(const CyclotomicElement& e);
Json search_outcome_json(const SearchOutcome& s);
Json summand_json(const SummandReport& r);
Json group_json(const AbelianGroupSpec& a);
Json field_json(const FieldSpec& k);

/// Full machine-readable bound report. All unbounded integers are rendered
/// as decimal strings; key order is fixed so serialization is canonical.
Json bound_report_json(const GonalityReport& rep);

std::string bound_report_text(const GonalityReport& rep);

Json violations_json(const std::vector<HypothesisViolation>& violations);
std::string violations_text(const std::vector<HypothesisViolation>& violations);

}  // namespace gonality
