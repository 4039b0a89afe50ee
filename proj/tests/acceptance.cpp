// Acceptance runner. Prints one PASS/FAIL line per criterion; an optional
// argument selects a single criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/conjecture.hpp"
#include "mckay/io.hpp"
#include "mckay/ithilb.hpp"
#include "mckay/nakamura.hpp"
#include "mckay/reid.hpp"
#include "mckay/walls.hpp"

using namespace mckay;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back(what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

const std::vector<std::string> kMatrix = {"6:1,2,3",  "7:1,2,4",         "11:1,2,8",        "12:1,2,9", "13:1,3,9",
                                          "15:1,2,12", "2:1,1,0*2:0,1,1", "3:1,2,0*3:0,1,2", "4:1,1,2",  "10:1,2,7",
                                          "9:1,2,6",   "30:2,3,25",       "35:1,3,31",       "25:1,3,21"};

using Tri = std::array<IVec3, 3>;

// Triangulation of 1/6(1,2,3) given by scaled vertex triples.
Triangulation sixth(const std::vector<Tri>& triangles) {
  auto g = GroupAction::parse("6:1,2,3");
  std::set<IVec3> points;
  for (const auto& tri : triangles) points.insert(tri.begin(), tri.end());
  std::vector<IVec3> verts(points.begin(), points.end());
  auto index = [&](const IVec3& v) { return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()); };
  std::vector<Triangle> tris;
  for (const auto& tri : triangles) {
    Triangle t{index(tri[0]), index(tri[1]), index(tri[2])};
    std::sort(t.begin(), t.end());
    tris.push_back(t);
  }
  return Triangulation(g.lattice(), verts, tris);
}

const IVec3 E1{6, 0, 0}, E2{0, 6, 0}, E3{0, 0, 6}, P123{1, 2, 3}, P240{2, 4, 0}, P303{3, 0, 3}, P420{4, 2, 0};

const std::vector<Tri> kGHilb = {{E3, E2, P123}, {E2, P123, P240}, {E3, P123, P303}, {P123, P303, P420}, {P123, P420, P240}, {P303, P420, E1}};
const std::vector<Tri> kMiddle = {{E3, E2, P123}, {E2, P123, P240}, {E3, P123, P303}, {P123, P303, P240}, {P303, P420, P240}, {P303, P420, E1}};
const std::vector<Tri> kRight = {{E3, E2, P123}, {E2, P123, P303}, {E3, P123, P303}, {E2, P303, P240}, {P303, P420, P240}, {P303, P420, E1}};
const std::vector<Tri> kOrder3 = {{E3, E2, P123}, {E2, P123, P240}, {E3, P123, P420}, {E3, P303, P420}, {P123, P420, P240}, {P303, P420, E1}};

int idx(const Triangulation& t, const IVec3& v) { return t.vertex_index(v); }

std::string name(const Triangulation& t, const EdgeKey& e) { return t.vertex_name(e.first) + "-" + t.vertex_name(e.second); }

Outcome fig2() {
  Outcome out;
  auto g = GroupAction::parse("6:1,2,3");
  auto recipe = reid_recipe(g);
  const auto& t = recipe.triangulation;
  out.require(t == sixth(kGHilb), "triangulation differs from fixture");
  std::set<IVec3> expected_vertices = {E1, E2, E3, P123, P240, P303, P420};
  out.require(std::set<IVec3>(t.vertices().begin(), t.vertices().end()) == expected_vertices, "vertex set differs");
  out.require(t.triangles().size() == 6, "triangle count");
  std::map<std::pair<IVec3, IVec3>, Int> expected = {{{E2, P123}, 3}, {{E3, P123}, 2}, {{P123, P240}, 2},
                                                     {{P123, P303}, 3}, {{P123, P420}, 4}, {{P303, P420}, 1}};
  const auto& labels = recipe.labels.edge_labels;
  out.require(labels.size() == expected.size(), "labelled edge count " + std::to_string(labels.size()));
  for (const auto& [pq, label] : expected) {
    int a = idx(t, pq.first), b = idx(t, pq.second);
    auto it = labels.find({std::min(a, b), std::max(a, b)});
    out.require(it != labels.end() && it->second.index == label, "edge label " + to_string(pq.first) + "-" + to_string(pq.second));
  }
  const auto& vl = recipe.labels.vertex_labels;
  int v = idx(t, P123);
  out.require(vl.size() == 1 && vl.count(v) && vl.at(v).characters.size() == 1 && vl.at(v).characters[0].index == 5, "vertex label at 123");
  return out;
}

Outcome fig5() {
  Outcome out;
  auto t = ghilb(GroupAction::parse("6:1,2,3"));
  int a = idx(t, P123), b420 = idx(t, P420), b240 = idx(t, P240);
  out.require(curve_type(t, a, b420).kind == CurveKind::Flop, "123-420 is not Flop");
  out.require(curve_type(t, a, b240).kind != CurveKind::Flop, "123-240 is Flop before the flip");
  auto [middle, created] = flip(t, a, b420);
  out.require(middle == sixth(kMiddle), "middle triangulation differs");
  out.require(name(middle, created) == name(middle, {std::min(idx(middle, P240), idx(middle, P303)), std::max(idx(middle, P240), idx(middle, P303))}),
              "first flip does not create 303-240");
  int m123 = idx(middle, P123), m240 = idx(middle, P240);
  out.require(curve_type(middle, m123, m240).kind == CurveKind::Flop, "123-240 is not Flop after the flip");
  auto [right, created2] = flip(middle, m123, m240);
  out.require(right == sixth(kRight), "right triangulation differs");
  int r303 = idx(right, P303), re2 = idx(right, E2);
  out.require(created2 == EdgeKey{std::min(r303, re2), std::max(r303, re2)}, "second flip does not create 303-e2");
  return out;
}

Outcome fig6() {
  Outcome out;
  auto g = GroupAction::parse("6:1,2,3");
  auto two = iterated_hilb(make_chain(g, {subgroup_of_order(g, 2)}));
  auto three = iterated_hilb(make_chain(g, {subgroup_of_order(g, 3)}));
  out.require(two.canonical_key() == sixth(kRight).canonical_key(), "order 2 differs from the double flop");
  out.require(three.canonical_key() == sixth(kOrder3).canonical_key(), "order 3 differs from G-Hilb with 123-303 flipped");
  auto t = ghilb(g);
  auto flipped = flip(t, idx(t, P123), idx(t, P303)).first;
  out.require(three == flipped, "order 3 differs from the library flip of 123-303");
  return out;
}

Outcome theta_sign_sweep() {
  Outcome out;
  int groups = 0, checks = 0;
  for (Int r = 2; r <= 30; ++r) {
    for (Int a = 0; a < r; ++a) {
      for (Int b = a; b < r; ++b) {
        Int c = (3 * r - a - b) % r;
        if (c < b) continue;
        auto g = GroupAction::cyclic(r, a, b, c);
        if (g.order() != r) continue;
        ++groups;
        for (const auto& sub : all_subgroups(g)) {
          if (sub.order() == 1) continue;
          auto ok = check_lemma_sign(g, sub, build_theta(g, sub));
          ++checks;
          if (ok != std::optional<bool>(true)) {
            out.require(false, "1/" + std::to_string(r) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                   ") order " + std::to_string(sub.order()));
          }
        }
      }
    }
  }
  out.note(std::to_string(groups) + " groups, " + std::to_string(checks) + " subgroups");
  return out;
}

// Line endpoints of an SVG drawing, rounded as rendered.
std::set<std::string> svg_lines(const std::string& svg, const std::string& attribute) {
  std::set<std::string> out;
  std::regex re("<line x1=\"([^\"]+)\" y1=\"([^\"]+)\" x2=\"([^\"]+)\" y2=\"([^\"]+)\"([^>]*)/>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    if ((*it)[5].str().find(attribute) == std::string::npos) continue;
    std::string p = (*it)[1].str() + "," + (*it)[2].str(), q = (*it)[3].str() + "," + (*it)[4].str();
    out.insert(std::min(p, q) + " " + std::max(p, q));
  }
  return out;
}

// Equilateral drawing: e1 bottom left, e2 bottom right, e3 on top.
std::string projected(const IVec3& v, Int d) {
  const double side = 600.0, margin = 40.0, height = side * std::sqrt(3.0) / 2.0;
  const double cx[3] = {margin, margin + side, margin + side / 2.0}, cy[3] = {margin + height, margin + height, margin};
  double x = 0, y = 0;
  for (int i = 0; i < 3; ++i) {
    x += static_cast<double>(v[static_cast<std::size_t>(i)]) / static_cast<double>(d) * cx[i];
    y += static_cast<double>(v[static_cast<std::size_t>(i)]) / static_cast<double>(d) * cy[i];
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f,%.2f", x, y);
  return buf;
}

std::set<std::string> projected_edges(const std::vector<std::pair<IVec3, IVec3>>& edges, Int d) {
  std::set<std::string> out;
  for (const auto& [p, q] : edges) {
    auto a = projected(p, d), b = projected(q, d);
    out.insert(std::min(a, b) + " " + std::max(a, b));
  }
  return out;
}

Outcome fig3() {
  Outcome out;
  auto g = GroupAction::parse("35:1,3,31");
  auto census = wall_census(g);
  std::size_t finals = 0;
  for (const auto& ls : census.long_sides) finals += ls.final_edges.size();
  out.require(census.long_sides.size() == 2, "long sides " + std::to_string(census.long_sides.size()));
  out.require(finals == 4, "final edges " + std::to_string(finals));

  const IVec3 e1{35, 0, 0}, e2{0, 35, 0};
  const IVec3 a{5, 15, 15}, b{15, 10, 10}, c{25, 5, 5}, p{2, 6, 27}, q{13, 4, 18}, r{24, 2, 9};
  auto dashed = projected_edges({{e2, a}, {a, b}, {b, c}, {c, e1}, {e2, p}, {p, q}, {q, r}, {r, e1}}, 35);
  auto bold = projected_edges({{q, p}, {e2, p}, {b, a}, {e2, a}}, 35);
  auto svg = render_svg(to_json(census, g));
  out.require(svg_lines(svg, "stroke-dasharray") == dashed, "dashed SVG edges differ from fixture");
  out.require(svg_lines(svg, "stroke-width=\"4\"") == bold, "bold SVG edges differ from fixture");
  return out;
}

Outcome conjecture_instances() {
  Outcome out;
  auto six = GroupAction::parse("6:1,2,3");
  for (Int order : {2, 3}) {
    auto report = conjecture_report(six, subgroup_of_order(six, order));
    out.require(report.verified, "1/6(1,2,3) order " + std::to_string(order) + " not verified");
  }
  auto g = GroupAction::parse("30:2,3,25");
  for (const auto& a : all_subgroups(g)) {
    if (a.order() == 1) continue;
    auto report = conjecture_report(g, a);
    std::string tag = "1/30(2,3,25) order " + std::to_string(a.order());
    bool fast = report.method == Method::CorollaryFastPath;
    std::string status = std::string(report.verified ? "verified" : "not verified") + " via " + method_name(report.method);
    if (a.order() == 2) {
      out.require(!fast, tag + " unexpectedly passes the fast path");
      out.note(tag + " (exception): " + status);
      continue;
    }
    out.require(report.verified && fast, tag + ": " + status);
  }
  auto h = GroupAction::parse("25:1,3,21");
  auto a = subgroup_of_order(h, 5);
  out.require(!corollary_check(h, a), "1/25(1,3,21) fast path holds");
  auto report = conjecture_report(h, a, {16, 2000});
  out.require(!report.lifted_on_divisors.empty(), "1/25(1,3,21) no lifted character on a divisor");
  return out;
}

Outcome oracle() {
  Outcome out;
  std::string counts;
  for (const auto& n : kMatrix) {
    auto g = GroupAction::parse(n);
    if (g.order() > 12) continue;
    auto t = ghilb(g);
    auto graph = flip_graph(t, 1000000);
    auto brute = brute_force_triangulations(g);
    out.require(!graph.truncated, n + " flip graph truncated");
    out.require(graph.nodes.size() == brute.size(), n + ": flip graph " + std::to_string(graph.nodes.size()) + " vs brute force " + std::to_string(brute.size()));
    out.require(std::find(brute.begin(), brute.end(), t) != brute.end(), n + ": G-Hilb missing from brute force");
    counts += (counts.empty() ? "" : ", ") + n + " " + std::to_string(brute.size());
  }
  out.note("triangulations: " + counts);
  return out;
}

Outcome properties() {
  Outcome out;
  for (const auto& n : kMatrix) {
    auto g = GroupAction::parse(n);
    auto t = ghilb(g);
    Int d = t.denominator();
    for (const auto& tri : t.triangles()) {
      out.require(is_unimodular(t.point(tri[0]), t.point(tri[1]), t.point(tri[2]), t.lattice()), n + ": non-unimodular triangle");
    }
    out.require(static_cast<Int>(t.triangles().size()) == g.order(), n + ": triangle count");
    auto V = static_cast<Int>(t.vertices().size()), E = static_cast<Int>(t.edges().size()), F = static_cast<Int>(t.triangles().size());
    out.require(V - E + F == 1, n + ": Euler relation");
    for (const auto& v : t.vertices()) {
      IVec3 m{floor_mod(v[0], d), floor_mod(v[1], d), floor_mod(v[2], d)};
      IVec3 scaled{m[0] * g.denominator() / d, m[1] * g.denominator() / d, m[2] * g.denominator() / d};
      out.require(sum(v) == d && g.contains(scaled), n + ": ray " + to_string(v) + " not junior");
    }
    for (const auto& e : t.interior_edges()) {
      if (curve_type(t, e).kind != CurveKind::Flop) continue;
      auto [u, created] = flip(t, e.a, e.b);
      auto [back, restored] = flip(u, created.first, created.second);
      out.require(back == t && restored == e.key(), n + ": flip is not an involution");
    }
    for (const auto& sub : all_subgroups(g)) {
      if (sub.order() == 1) continue;
      out.require(build_theta(g, sub).is_balanced(), n + ": theta does not sum to 0");
      out.require(epsilon_certified(g, sub), n + ": epsilon halving changes a sign");
    }
  }
  return out;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
  double limit = 0;  // seconds, 0 for none
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "G-Hilb and labels of 1/6(1,2,3)", fig2, 1},
      {2, "Flop types and the two-step flip", fig5},
      {3, "iterated Hilbert schemes of 1/6(1,2,3)", fig6},
      {4, "theta sign sweep r <= 30", theta_sign_sweep, 60},
      {5, "long sides and finals of 1/35(1,3,31)", fig3, 10},
      {6, "conjecture instances", conjecture_instances},
      {7, "flip graph against brute force", oracle, 120},
      {8, "property suites", properties},
  };
  int only = argc > 1 ? std::stoi(argv[1]) : 0;
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0) out.require(secs < c.limit, "over the time limit");
    all_pass = all_pass && out.pass;
    std::printf("%s %d %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.number, c.title, secs);
    for (const auto& d : out.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
