#include "doctest.h"
#include "mckay/reid.hpp"

#include <map>
#include <set>
#include <tuple>

#include "mckay/nakamura.hpp"

using namespace mckay;

namespace {

// Minimal pair by exhaustive search over monomials of degree <= 2r grouped
// by (character, weight at a, weight at b).
std::optional<std::pair<IVec3, IVec3>> brute_pair(const Triangulation& t, const Edge& e, const GroupAction& g) {
  Int bound = 2 * g.denominator();
  const IVec3& a = t.vertices()[e.a];
  const IVec3& b = t.vertices()[e.b];
  std::map<std::tuple<Int, Int, Int>, std::vector<IVec3>> buckets;
  for (Int i = 0; i <= bound; ++i) {
    for (Int j = 0; i + j <= bound; ++j) {
      for (Int k = 0; i + j + k <= bound; ++k) {
        IVec3 m{i, j, k};
        buckets[{g.character_of(m).index, dot(a, m), dot(b, m)}].push_back(m);
      }
    }
  }
  std::optional<std::pair<IVec3, IVec3>> best;
  auto deg = [](const IVec3& m) { return m[0] + m[1] + m[2]; };
  auto better = [&](const std::pair<IVec3, IVec3>& p) {
    if (!best) return true;
    auto key = [&](const std::pair<IVec3, IVec3>& q) { return std::make_tuple(deg(q.first) + deg(q.second), q.first, q.second); };
    return key(p) < key(*best);
  };
  for (const auto& [k, ms] : buckets) {
    for (std::size_t x = 0; x < ms.size(); ++x) {
      for (std::size_t y = x + 1; y < ms.size(); ++y) {
        const auto& m1 = ms[x];
        const auto& m2 = ms[y];
        bool coprime = true;
        for (int c = 0; c < 3; ++c) coprime = coprime && (m1[c] == 0 || m2[c] == 0);
        if (!coprime) continue;
        std::pair<IVec3, IVec3> p = (std::make_pair(deg(m2), m2) < std::make_pair(deg(m1), m1)) ? std::make_pair(m2, m1) : std::make_pair(m1, m2);
        if (better(p)) best = p;
      }
    }
  }
  return best;
}

int vid(const Triangulation& t, IVec3 p) { return t.vertex_index(p); }

Int label_of(const ReidRecipe& r, IVec3 a, IVec3 b) {
  int x = vid(r.triangulation, a), y = vid(r.triangulation, b);
  return r.labels.edge_labels.at({std::min(x, y), std::max(x, y)}).index;
}

}  // namespace

TEST_CASE("Reid's recipe for 1/6(1,2,3)") {
  auto r = reid_recipe(GroupAction::cyclic(6, 1, 2, 3));
  CHECK(label_of(r, {0, 6, 0}, {1, 2, 3}) == 3);
  CHECK(label_of(r, {0, 0, 6}, {1, 2, 3}) == 2);
  CHECK(label_of(r, {1, 2, 3}, {2, 4, 0}) == 2);
  CHECK(label_of(r, {1, 2, 3}, {3, 0, 3}) == 3);
  CHECK(label_of(r, {1, 2, 3}, {4, 2, 0}) == 4);
  CHECK(label_of(r, {3, 0, 3}, {4, 2, 0}) == 1);
  REQUIRE(r.labels.vertex_labels.size() == 1);
  const auto& vl = r.labels.vertex_labels.at(vid(r.triangulation, {1, 2, 3}));
  REQUIRE(vl.characters.size() == 1);
  CHECK(vl.characters[0].index == 5);
}

TEST_CASE("edge pairs of 1/6(1,2,3)") {
  auto r = reid_recipe(GroupAction::cyclic(6, 1, 2, 3));
  auto pair_of = [&](IVec3 a, IVec3 b) {
    int x = vid(r.triangulation, a), y = vid(r.triangulation, b);
    return r.labels.edge_pairs.at({std::min(x, y), std::max(x, y)});
  };
  auto p = pair_of({0, 0, 6}, {1, 2, 3});
  CHECK(std::set<IVec3>{p.first, p.second} == std::set<IVec3>{{0, 1, 0}, {2, 0, 0}});
  p = pair_of({1, 2, 3}, {4, 2, 0});
  CHECK(std::set<IVec3>{p.first, p.second} == std::set<IVec3>{{0, 2, 0}, {1, 0, 1}});
  p = pair_of({3, 0, 3}, {4, 2, 0});
  CHECK(std::set<IVec3>{p.first, p.second} == std::set<IVec3>{{1, 0, 0}, {0, 2, 1}});
}

TEST_CASE("1/2(1,0,1) and the trivial group") {
  auto r = reid_recipe(GroupAction::cyclic(2, 1, 0, 1));
  REQUIRE(r.labels.edge_labels.size() == 1);
  CHECK(r.labels.edge_labels.begin()->second.index == 1);
  auto p = r.labels.edge_pairs.begin()->second;
  CHECK(std::set<IVec3>{p.first, p.second} == std::set<IVec3>{{1, 0, 0}, {0, 0, 1}});
  auto t = reid_recipe(GroupAction::trivial());
  CHECK(t.labels.edge_labels.empty());
  CHECK(t.labels.vertex_labels.empty());
}

TEST_CASE("straight lines of 1/6(1,2,3)") {
  auto r = reid_recipe(GroupAction::cyclic(6, 1, 2, 3));
  const auto& t = r.triangulation;
  auto lines = straight_lines(t);
  std::set<std::vector<int>> got;
  for (const auto& l : lines) got.insert(l.vertices);
  auto line = [&](std::vector<IVec3> pts) {
    std::vector<int> v;
    for (auto p : pts) v.push_back(vid(t, p));
    if (v.front() > v.back()) std::reverse(v.begin(), v.end());
    return v;
  };
  // e2-123 and 123-303 are not collinear: (1,-4,3) and (2,-2,0)
  std::set<std::vector<int>> expected = {line({{0, 0, 6}, {1, 2, 3}, {2, 4, 0}}), line({{0, 6, 0}, {1, 2, 3}}),
                                         line({{1, 2, 3}, {3, 0, 3}}), line({{1, 2, 3}, {4, 2, 0}}),
                                         line({{3, 0, 3}, {4, 2, 0}})};
  CHECK(got == expected);
  CHECK(straight_lines(ghilb(GroupAction::trivial())).empty());
}

TEST_CASE("closed form pair agrees with exhaustive search") {
  for (auto n : {"6:1,2,3", "11:1,2,8", "7:1,2,4", "2:1,1,0*2:0,1,1", "3:1,2,0*3:0,1,2", "9:1,2,6"}) {
    CAPTURE(n);
    auto g = GroupAction::parse(n);
    auto t = ghilb(g);
    for (const auto& e : t.interior_edges()) {
      auto oracle = brute_pair(t, e, g);
      REQUIRE(oracle.has_value());
      auto p = edge_pair(t, e, g);
      CHECK(p.first == oracle->first);
      CHECK(p.second == oracle->second);
    }
  }
}

TEST_CASE("every nontrivial character marks exactly one chain or divisor") {
  for (auto n : {"6:1,2,3", "11:1,2,8", "35:1,3,31", "25:1,3,21", "30:2,3,25", "20:1,4,15", "27:1,5,21", "40:1,9,30",
                 "3:1,2,0*3:0,1,2", "6:1,2,3*2:1,1,0", "3:1,1,1", "5:1,1,3", "13:1,3,9", "17:1,3,13"}) {
    CAPTURE(n);
    auto g = GroupAction::parse(n);
    auto r = reid_recipe(g);
    std::set<Int> edge_chars;
    for (const auto& [k, c] : r.labels.edge_labels) edge_chars.insert(c.index);
    std::map<Int, int> vertex_count;
    for (const auto& [v, l] : r.labels.vertex_labels) {
      for (auto c : l.characters) vertex_count[c.index]++;
      if (l.rule == VertexRule::DelPezzo) {
        // the two labels multiply to the product of the three chain characters
        REQUIRE(l.characters.size() == 2);
        std::set<Character> chains;
        for (int w : r.triangulation.neighbours(v)) chains.insert(r.labels.edge_labels.at({std::min(v, w), std::max(v, w)}));
        Character prod = g.trivial_character();
        for (auto c : chains) prod = g.multiply(prod, c);
        CHECK(g.multiply(l.characters[0], l.characters[1]) == prod);
      }
    }
    CHECK(edge_chars.count(0) == 0);
    CHECK(vertex_count.count(0) == 0);
    for (const auto& [c, k] : vertex_count) {
      CHECK(k == 1);
      CHECK(edge_chars.count(c) == 0);
    }
    CHECK(static_cast<Int>(edge_chars.size() + vertex_count.size()) == g.order() - 1);
    // labels are constant along straight lines
    for (const auto& line : straight_lines(r.triangulation)) {
      for (const auto& e : line.edges) CHECK(r.labels.edge_labels.at(e) == r.labels.edge_labels.at(line.edges[0]));
    }
  }
}

TEST_CASE("labels are equivariant under permuting coordinates") {
  auto g = GroupAction::cyclic(11, 1, 2, 8);
  auto h = GroupAction::cyclic(11, 2, 8, 1);  // (x,y,z) -> (y,z,x)
  auto rg = reid_recipe(g), rh = reid_recipe(h);
  auto rot = [](IVec3 v) { return IVec3{v[1], v[2], v[0]}; };
  for (const auto& [k, c] : rg.labels.edge_labels) {
    int a = rh.triangulation.vertex_index(rot(rg.triangulation.vertices()[k.first]));
    int b = rh.triangulation.vertex_index(rot(rg.triangulation.vertices()[k.second]));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(rh.labels.edge_labels.at({std::min(a, b), std::max(a, b)}) == c);
  }
}

TEST_CASE("1/3(1,1,1) is a meeting of champions") {
  auto r = reid_recipe(GroupAction::cyclic(3, 1, 1, 1));
  REQUIRE(r.labels.vertex_labels.size() == 1);
  const auto& l = r.labels.vertex_labels.begin()->second;
  CHECK(l.rule == VertexRule::Champions);
  CHECK(l.characters == std::vector<Character>{{2}});
}
