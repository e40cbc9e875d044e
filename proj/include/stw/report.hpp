#pragma once

#include <string>
#include <vector>

#include "stw/verify.hpp"

namespace stw {

// JSON array of report objects; ExactCount values are decimal strings.
// The layout is documented in docs/report-schema.md.
std::string reports_to_json(const std::vector<VerificationReport>& reports);
// Inverse of reports_to_json; throws ParseError on malformed input.
std::vector<VerificationReport> reports_from_json(const std::string& text);

}  // namespace stw
