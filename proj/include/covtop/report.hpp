#pragma once

// Covering-document ingestion and report emission (machine JSON + human text).

#include <string>
#include <vector>

#include <json.hpp>

#include "covtop/claims.hpp"
#include "covtop/covering.hpp"
#include "covtop/topology.hpp"

namespace covtop {

struct ParsedDocument {
    Covering covering;
    std::vector<std::string> warnings;  // e.g. duplicate blocks in the file
};

/// Parses {"universe": [...], "covering": [[...], ...]}. Throws
/// ValidationError with a field-scoped message on malformed input.
ParsedDocument parse_covering_document(const std::string& text);

std::string emit_covering_document(const Covering& c);

nlohmann::json set_to_json(const Universe& u, Bits bits);
nlohmann::json family_to_json(const Universe& u, const std::vector<Bits>& members);

nlohmann::json info_report(const Covering& c, const SweepBudget& budget);
nlohmann::json approx_report(const Covering& c, const std::vector<OperatorKind>& kinds,
                             Bits set, bool with_duality, const SweepBudget& budget);
nlohmann::json topology_report(const Covering& c, OperatorKind kind, const SweepBudget& budget);
nlohmann::json verify_report(const Covering& c, const std::vector<std::string>& ids,
                             const SweepBudget& budget);
nlohmann::json suite_to_json(const SuiteReport& report);

/// Plain-text rendering of a machine report, for terminal output.
std::string render_human(const nlohmann::json& report);

}  // namespace covtop
