#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <frobseries/congruence.hpp>

namespace frobseries {

// Report wire format:
//   {"claim": {"family", "k", "a", "b", "m"}, "n_max", "status",
//    "counterexamples": [{"n", "value"}], "route"}
void to_json(nlohmann::json &j, const CongruenceClaim &claim);
void from_json(const nlohmann::json &j, CongruenceClaim &claim);
void to_json(nlohmann::json &j, const VerificationReport &report);
void from_json(const nlohmann::json &j, VerificationReport &report);

/// {"suite", "generated_at"?, "all_verified", "reports": [...]}
nlohmann::json report_document(std::string_view suite, const std::vector<VerificationReport> &reports,
                               bool with_timestamp);

std::vector<VerificationReport> reports_from_document(const nlohmann::json &doc);

// Structural problems with a report document; empty when it conforms.
std::vector<std::string> report_document_problems(const nlohmann::json &doc);

} // namespace frobseries
