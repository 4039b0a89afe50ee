#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckay/reid.hpp"

namespace mckay {

/// A triangle P, P+n·u, P+n·w whose standard subdivision into n² unimodular
/// triangles is part of the triangulation, maximal for its anchor.
struct RegularTriangle {
  int anchor = 0;
  IVec3 u{0, 0, 0};  // scaled lattice steps
  IVec3 w{0, 0, 0};
  Int side = 1;
  std::vector<EdgeKey> interior_edges;
};

/// Regular triangles of side at least two (deduplicated).
std::vector<RegularTriangle> regular_triangles(const Triangulation& t);

/// Interior edges lying strictly inside some regular triangle.
std::set<EdgeKey> edges_inside_regular_triangles(const Triangulation& t);

struct GeneralisedLongSide {
  Character label;
  std::vector<int> path;                    // vertices from one boundary point to another
  std::vector<std::vector<int>> segments;   // maximal straight pieces of the path
  std::vector<EdgeKey> edges;               // along the path
  std::vector<EdgeKey> final_edges;
};

std::vector<GeneralisedLongSide> generalised_long_sides(const Triangulation& t, const ReidLabels& labels);

/// Final curves: in each straight end segment, the edge furthest from the
/// end of the long side.
std::vector<EdgeKey> final_curves(const Triangulation& t, const GeneralisedLongSide& side);

enum class WallType { Divisor, FlopCurve, LongSide };

std::string wall_type_name(WallType type);

struct Wall {
  WallType type = WallType::Divisor;
  std::optional<int> vertex;                // Divisor
  std::optional<EdgeKey> edge;              // FlopCurve
  std::optional<std::size_t> long_side;     // LongSide: index into WallCensus::long_sides
  std::vector<Character> labels;
  std::optional<std::size_t> also_final_of; // FlopCurve that is a final curve of a long side
};

struct WallCensus {
  Triangulation triangulation;
  ReidLabels labels;
  std::vector<GeneralisedLongSide> long_sides;
  std::vector<Wall> walls;

  std::size_t count(WallType type) const;
};

WallCensus wall_census(const GroupAction& group);
WallCensus wall_census(const Triangulation& ghilb, const ReidLabels& labels);

}  // namespace mckay
