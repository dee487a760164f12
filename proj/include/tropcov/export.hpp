#pragma once

#include <string>

#include <json.hpp>

#include "tropcov/wick.hpp"

namespace tropcov {

/// Catalog as JSON: per cover the vertex list with genus pairs, the edge
/// list with weights, end labels, and the weight as a "p/q" string.
nlohmann::ordered_json catalog_json(const CoverCatalog& catalog);

/// Catalog as DOT, one graph block per cover; edges labeled "w=<weight>",
/// vertices labeled "g=(g1,g2)".
std::string catalog_dot(const CoverCatalog& catalog);

nlohmann::ordered_json upoly_json(const UPoly& poly);

}  // namespace tropcov
