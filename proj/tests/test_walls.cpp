#include "doctest.h"
#include "mckay/walls.hpp"

#include <algorithm>
#include <set>

#include "mckay/nakamura.hpp"

using namespace mckay;

namespace {

EdgeKey edge(const Triangulation& t, IVec3 a, IVec3 b) {
  int x = t.vertex_index(a), y = t.vertex_index(b);
  REQUIRE(x >= 0);
  REQUIRE(y >= 0);
  return {std::min(x, y), std::max(x, y)};
}

std::vector<int> path_of(const Triangulation& t, std::vector<IVec3> pts) {
  std::vector<int> out;
  for (const auto& p : pts) out.push_back(t.vertex_index(p));
  if (out.front() > out.back()) std::reverse(out.begin(), out.end());
  return out;
}

const char* kGroups[] = {"6:1,2,3",  "7:1,2,4",  "9:1,2,6",  "11:1,2,8", "12:1,2,9", "13:1,3,9",   "14:1,2,11",
                         "15:1,2,12", "17:1,3,13", "25:1,3,21", "30:2,3,25", "35:1,3,31", "3:1,1,1", "5:1,1,3"};

}  // namespace

TEST_CASE("regular triangles of 1/6(1,2,3)") {
  auto t = ghilb(GroupAction::parse("6:1,2,3"));
  auto rts = regular_triangles(t);
  REQUIRE(rts.size() == 1);
  CHECK(rts[0].side == 2);
  std::set<EdgeKey> inside(rts[0].interior_edges.begin(), rts[0].interior_edges.end());
  std::set<EdgeKey> expected = {edge(t, {3, 0, 3}, {4, 2, 0}), edge(t, {3, 0, 3}, {1, 2, 3}), edge(t, {1, 2, 3}, {4, 2, 0})};
  CHECK(inside == expected);
}

TEST_CASE("generalised long sides of 1/35(1,3,31)") {
  auto g = GroupAction::parse("35:1,3,31");
  auto census = wall_census(g);
  const auto& t = census.triangulation;
  REQUIRE(census.long_sides.size() == 2);
  CHECK(census.count(WallType::LongSide) == 2);

  const auto& a = census.long_sides[0];
  const auto& b = census.long_sides[1];
  CHECK(a.label.index == 15);
  CHECK(b.label.index == 27);
  CHECK(a.path == path_of(t, {{0, 35, 0}, {5, 15, 15}, {15, 10, 10}, {25, 5, 5}, {35, 0, 0}}));
  CHECK(b.path == path_of(t, {{0, 35, 0}, {2, 6, 27}, {13, 4, 18}, {24, 2, 9}, {35, 0, 0}}));
  CHECK(a.segments.size() == 2);
  CHECK(b.segments.size() == 2);

  std::set<EdgeKey> finals;
  for (const auto& ls : census.long_sides) finals.insert(ls.final_edges.begin(), ls.final_edges.end());
  std::set<EdgeKey> expected = {edge(t, {13, 4, 18}, {2, 6, 27}), edge(t, {0, 35, 0}, {2, 6, 27}),
                                edge(t, {15, 10, 10}, {5, 15, 15}), edge(t, {0, 35, 0}, {5, 15, 15})};
  CHECK(finals == expected);
}

TEST_CASE("long sides and census of 1/6(1,2,3)") {
  auto census = wall_census(GroupAction::parse("6:1,2,3"));
  const auto& t = census.triangulation;
  REQUIRE(census.long_sides.size() == 1);
  const auto& ls = census.long_sides[0];
  CHECK(ls.label.index == 2);
  CHECK(ls.path == path_of(t, {{0, 0, 6}, {1, 2, 3}, {2, 4, 0}}));
  CHECK(ls.segments.size() == 1);
  std::vector<EdgeKey> expected = {edge(t, {0, 0, 6}, {1, 2, 3}), edge(t, {1, 2, 3}, {2, 4, 0})};
  std::sort(expected.begin(), expected.end());
  CHECK(ls.final_edges == expected);

  CHECK(census.count(WallType::Divisor) == 1);
  CHECK(census.count(WallType::FlopCurve) == 3);
  CHECK(census.count(WallType::LongSide) == 1);
  std::set<Int> flop_labels;
  for (const auto& w : census.walls) {
    if (w.type == WallType::Divisor) {
      CHECK(*w.vertex == t.vertex_index(IVec3{1, 2, 3}));
      REQUIRE(w.labels.size() == 1);
      CHECK(w.labels[0].index == 5);
    }
    if (w.type == WallType::FlopCurve) {
      flop_labels.insert(w.labels.at(0).index);
      CHECK_FALSE(w.also_final_of.has_value());
    }
  }
  CHECK(flop_labels == std::set<Int>{1, 3, 4});
}

TEST_CASE("long side of 1/2(1,0,1) is the single interior edge") {
  auto census = wall_census(GroupAction::parse("2:1,0,1"));
  const auto& t = census.triangulation;
  REQUIRE(census.long_sides.size() == 1);
  const auto& ls = census.long_sides[0];
  CHECK(ls.label.index == 1);
  std::vector<EdgeKey> single = {edge(t, {0, 2, 0}, {1, 0, 1})};
  CHECK(ls.edges == single);
  CHECK(ls.final_edges == single);
  CHECK(census.count(WallType::Divisor) == 0);
  CHECK(census.count(WallType::FlopCurve) == 0);
}

TEST_CASE("trivial group has no walls") {
  auto census = wall_census(GroupAction::parse("1:0,0,0"));
  CHECK(census.walls.empty());
  CHECK(census.long_sides.empty());
}

TEST_CASE("wall census properties") {
  for (const char* spec : kGroups) {
    CAPTURE(spec);
    auto g = GroupAction::parse(spec);
    auto census = wall_census(g);
    const auto& t = census.triangulation;

    // edges inside a standard subdivision are (-1,-1)-curves
    for (const auto& k : edges_inside_regular_triangles(t)) {
      CHECK(curve_type(t, k.first, k.second).kind == CurveKind::Flop);
    }

    std::size_t interior_vertices = 0;
    for (int v = 0; v < static_cast<int>(t.vertices().size()); ++v) interior_vertices += t.is_boundary_vertex(v) ? 0 : 1;
    CHECK(census.count(WallType::Divisor) == interior_vertices);

    std::size_t flops = 0;
    for (const auto& e : t.interior_edges()) flops += curve_type(t, e).kind == CurveKind::Flop ? 1 : 0;
    CHECK(census.count(WallType::FlopCurve) == flops);
    CHECK(census.count(WallType::LongSide) == census.long_sides.size());

    std::set<Character> long_labels;
    for (const auto& ls : census.long_sides) {
      CHECK(long_labels.insert(ls.label).second);
      CHECK(t.is_boundary_vertex(ls.path.front()));
      CHECK(t.is_boundary_vertex(ls.path.back()));
      for (std::size_t i = 1; i + 1 < ls.path.size(); ++i) CHECK_FALSE(t.is_boundary_vertex(ls.path[i]));
      for (const auto& e : ls.edges) CHECK(census.labels.edge_labels.at(e) == ls.label);
      CHECK(!ls.final_edges.empty());
      CHECK(ls.final_edges.size() <= 2);
      for (const auto& f : ls.final_edges) {
        CHECK(std::find(ls.edges.begin(), ls.edges.end(), f) != ls.edges.end());
        bool on_end_segment = false;
        for (const auto* seg : {&ls.segments.front(), &ls.segments.back()}) {
          on_end_segment = on_end_segment || (std::find(seg->begin(), seg->end(), f.first) != seg->end() &&
                                              std::find(seg->begin(), seg->end(), f.second) != seg->end());
        }
        CHECK(on_end_segment);
      }
    }
    for (const auto& w : census.walls) {
      if (w.type == WallType::Divisor) CHECK(w.labels.size() <= 2);
      if (w.type != WallType::Divisor) CHECK(w.labels.size() == 1);
    }
  }
}
