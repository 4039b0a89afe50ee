#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mckay/conjecture.hpp"
#include "mckay/walls.hpp"

namespace mckay {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {schema_version, denominator, lattice, vertices, triangles}; coordinates
/// are scaled integers.
Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const GroupAction& group);
Json to_json(const GroupAction& group, const SubgroupSpec& subgroup);

/// Adds "edge_labels" and "vertex_labels" to a triangulation document.
void add_labels(Json& doc, const GroupAction& group, const ReidLabels& labels);
Json curve_types_json(const Triangulation& t);

/// Triangulation document with labels, "dashed" long-side edges, "bold"
/// final curves and a "walls" list.
Json to_json(const WallCensus& census, const GroupAction& group);

Json to_json(const ConjectureReport& report);

/// Standalone SVG drawing of a triangulation document. Reads the optional
/// "edge_labels", "vertex_labels", "dashed" and "bold" entries.
std::string render_svg(const Json& doc);

}  // namespace mckay
