#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "overdet/counting.hpp"
#include "overdet/oracle.hpp"

namespace overdet {

struct ParsedCollection {
    Collection collection;
    std::string name;                   // optional document name
    std::vector<std::string> warnings;  // e.g. duplicate points dropped
};

// Parses a collection document:
//   {"n": 2, "supports": [[[0,0],[1,0]], ...], "name": "optional"}
// Throws ParseError with a JSON-path to the offending field.
ParsedCollection parse_collection(const std::string& text);

nlohmann::json collection_to_json(const Collection& c, const std::string& name = "");

nlohmann::json analysis_to_json(const AnalysisReport& r);
nlohmann::json reduction_to_json(const Reduction& r);
nlohmann::json count_to_json(const CountReport& r);
nlohmann::json degrees_to_json(const ResultantDegrees& r);
nlohmann::json mixed_volume_to_json(const MixedVolumeResult& r);
nlohmann::json sample_to_json(const ConsistentSample& s);
nlohmann::json verification_to_json(const VerificationReport& r);

// Envelope written by the CLI: command echo, digest of the canonicalized
// input document, version, and the result payload.
nlohmann::json report_document(const std::string& command, const nlohmann::json& input_echo,
                               nlohmann::json result);

std::string input_digest(const nlohmann::json& canonical_input);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace overdet
