#pragma once

#include "hall/bruteforce.hpp"
#include "hall/classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hall {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const HallReport& r);
// Inverse of to_json; throws ParseError on malformed input.
HallReport report_from_json(const nlohmann::json& j);

// Two-space indented, keys sorted, trailing newline.
std::string render_json(const HallReport& r);
std::string render_text(const HallReport& r);

// Fixed column order; see csv_header().
std::string csv_header();
std::string csv_row(const HallReport& r);
std::string csv_escape(const std::string& field);

nlohmann::json census_to_json(const ConcreteGroup& g, const CensusReport& c);
nlohmann::json outcome_to_json(const VerificationOutcome& v);

}  // namespace hall
