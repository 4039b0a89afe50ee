#include "doctest.h"
#include "mckay/group.hpp"

#include <set>

using namespace mckay;

TEST_CASE("cyclic group 1/6(1,2,3)") {
  auto g = GroupAction::cyclic(6, 1, 2, 3);
  CHECK(g.order() == 6);
  CHECK(g.is_cyclic());
  CHECK(g.character_of({1, 0, 0}).index == 1);
  CHECK(g.character_of({0, 1, 0}).index == 2);
  CHECK(g.character_of({0, 0, 1}).index == 3);
  CHECK(g.character_of({-1, 0, 0}).index == 5);
  CHECK(g.coordinate_order(0) == 6);
  CHECK(g.coordinate_order(1) == 3);
  CHECK(g.coordinate_order(2) == 2);
  auto j = junior_elements(g);
  REQUIRE(j.size() == 4);
  std::set<IVec3> scaled;
  for (const auto& p : j) scaled.insert(p.scaled_to(6));
  CHECK(scaled == std::set<IVec3>{{1, 2, 3}, {2, 4, 0}, {3, 0, 3}, {4, 2, 0}});
  CHECK(g.notation() == "6:1,2,3");
}

TEST_CASE("parse and reject") {
  CHECK(GroupAction::parse("6:1,2,3") == GroupAction::cyclic(6, 1, 2, 3));
  CHECK_THROWS_AS(GroupAction::parse("6:1,2,4"), GroupError);
  CHECK_THROWS(GroupAction::parse("garbage"));
  auto p = GroupAction::parse("2:1,1,0*2:0,1,1");
  CHECK(p.order() == 4);
  CHECK_FALSE(p.is_cyclic());
  CHECK(junior_elements(p).size() == 3);
}

TEST_CASE("every character has a monomial representative") {
  for (auto g : {GroupAction::cyclic(6, 1, 2, 3), GroupAction::cyclic(11, 1, 2, 8), GroupAction::parse("2:1,1,0*2:0,1,1"),
                 GroupAction::parse("3:1,2,0*3:0,1,2")}) {
    for (const auto& chi : g.characters()) CHECK(g.character_of(g.representative_monomial(chi)) == chi);
    CHECK(static_cast<Int>(g.characters().size()) == g.order());
  }
}

TEST_CASE("subgroups of 1/6(1,2,3)") {
  auto g = GroupAction::cyclic(6, 1, 2, 3);
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 4);
  auto a = subgroup_of_order(g, 2);
  CHECK(a.order() == 2);
  CHECK(a.elements == std::vector<IVec3>{{0, 0, 0}, {3, 0, 3}});
  // Characters trivial on A are the even ones.
  std::vector<Int> lifted;
  for (auto c : a.lifted) lifted.push_back(c.index);
  CHECK(lifted == std::vector<Int>{0, 2, 4});
  CHECK(a.action.order() == 2);
  CHECK(a.action == GroupAction::cyclic(2, 1, 0, 1));
  auto b = subgroup_of_order(g, 3);
  CHECK(is_subgroup_of(make_subgroup(g, {}), b));
  CHECK_FALSE(is_subgroup_of(a, b));
  CHECK_THROWS(subgroup_of_order(g, 4));
}

TEST_CASE("mckay quiver of 1/6(1,2,3)") {
  auto g = GroupAction::cyclic(6, 1, 2, 3);
  auto q = mckay_quiver(g);
  CHECK(q.vertices.size() == 6);
  CHECK(q.arrows.size() == 18);
  for (const auto& a : q.arrows) {
    Int w = a.coordinate == 0 ? 1 : a.coordinate == 1 ? 2 : 3;
    CHECK(a.head.index == (a.tail.index + w) % 6);
  }
}

TEST_CASE("zero generated theta is balanced") {
  auto g = GroupAction::cyclic(7, 1, 2, 4);
  auto t = zero_generated_theta(g);
  CHECK(t.is_balanced());
  CHECK((t({0}) == Rational(-6)));
  CHECK((t({3}) == Rational(1)));
}
