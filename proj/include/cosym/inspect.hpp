#pragma once

#include <string>

#include <json.hpp>

#include "cosym/phase.hpp"
#include "cosym/report.hpp"

namespace cosym {

/// Full diagnostic dump for a single geodesic: causal class, orbit data, the
/// horizontal space, chart choice, gauge-fixed representative, sigma with its
/// rank, and — on null geodesics — the contact package. The same data backs
/// both the JSON and the text rendering.
nlohmann::json inspect_point(const RunConfig& cfg, const Geodesic<Rat>& gamma);

std::string inspect_text(const nlohmann::json& dump);

/// Parse the CLI geodesic syntax "x1,..,xn;v1,..,vn" with rational entries.
Geodesic<Rat> parse_geodesic(const std::string& text, std::size_t dim);

}  // namespace cosym
