#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "phipoly/bound_engine.hpp"
#include "phipoly/proof_diagnostics.hpp"
#include "phipoly/verification.hpp"

namespace phipoly {

// Field order in machine output is part of the CLI contract, hence ordered.
using Json = nlohmann::ordered_json;

// The hypotheses the engine actually checked, spelled out for the report.
std::vector<std::string> hypothesis_notes(const BoundReport& rep);

// Machine and human forms of one bound report. Both read only the report
// (plus the echoed prime text); neither recomputes anything.
Json report_to_json(const BoundReport& rep, const std::string& prime);
std::string report_to_text(const BoundReport& rep, const std::string& prime);

// Grid plot with vertices marked and slopes labeled as exact fractions.
// Rank-1 polygons only; higher ranks get a textual note instead.
std::string render_polygon_ascii(const NewtonPolygon& poly);

// SVG 1.1 document; coordinates are produced by exact integer scaling.
std::string render_polygon_svg(const NewtonPolygon& poly);

Json diagnostics_to_json(const std::vector<EdgeIdentityVerdict>& verdicts);
std::string diagnostics_to_text(const std::vector<EdgeIdentityVerdict>& verdicts);

Json campaign_to_json(const CampaignSummary& sum);
std::string campaign_to_text(const CampaignSummary& sum);

Json partition_to_json(const PartitionOutcome& out);
std::string partition_to_text(const PartitionOutcome& out);

}  // namespace phipoly
