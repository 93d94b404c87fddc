#pragma once

#include "sf2/verifier.hpp"

#include <json.hpp>

namespace sf2 {

/// One JSON object per degree entry:
/// {check, degree, pass, dims:{...}, witness?, status?}.
nlohmann::json degree_json(const CheckReport& rep, const DegreeOutcome& o);

/// Whole-report object: {check, status, pass, degrees:[...]}.
nlohmann::json report_json(const CheckReport& rep);

/// Text rendering, one line per degree entry.
std::string report_text(const CheckReport& rep);

}  // namespace sf2
