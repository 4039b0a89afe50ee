#include "mckay/conjecture.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "mckay/nakamura.hpp"
#include "mckay/walls.hpp"

namespace mckay {

namespace {

struct Node {
  Triangulation t;
  EdgeLabels labels;
  std::set<Character> covered;  // lifted characters already flopped
  std::optional<std::size_t> parent;
  EdgeKey flipped{-1, -1};
  EdgeKey created{-1, -1};
  Character label;
  std::size_t depth = 0;
};

// Only labels of lifted characters not yet flopped can affect the goal.
std::string state_key(const Node& n, const std::set<Character>& lifted, bool with_labels) {
  std::string key = n.t.canonical_key();
  if (!with_labels) return key;
  key += "|";
  for (const auto& [e, c] : n.labels) {
    if (!lifted.count(c) || n.covered.count(c)) continue;
    key += std::to_string(e.first) + "," + std::to_string(e.second) + ":" + std::to_string(c.index) + ";";
  }
  key += "|";
  for (const auto& c : n.covered) key += std::to_string(c.index) + ";";
  return key;
}

FlipPath unwind(const std::vector<Node>& nodes, std::size_t at) {
  FlipPath path;
  for (std::size_t i = at; nodes[i].parent; i = *nodes[i].parent) {
    const auto& n = nodes[i];
    path.steps.push_back({nodes[*n.parent].t, n.flipped, n.created, n.label});
    path.chi_gamma.insert(n.label);
  }
  std::reverse(path.steps.begin(), path.steps.end());
  return path;
}

// Paths visit each triangulation at most once.
bool on_path(const std::vector<Node>& nodes, std::size_t at, const Triangulation& t) {
  for (std::optional<std::size_t> i = at; i; i = nodes[*i].parent) {
    if (nodes[*i].t == t) return true;
  }
  return false;
}

// Breadth-first search over flips of (-1,-1) edges. With track_cover the
// state includes the propagated labels and the lifted characters flopped so
// far, and the goal requires all of them.
SearchOutcome bfs(const Triangulation& start, const EdgeLabels& start_labels, const Triangulation& target,
                  const std::set<Character>& lifted, bool track_cover, const SearchBounds& bounds) {
  SearchOutcome out;
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  nodes.push_back(Node{start, start_labels, {}, std::nullopt, {-1, -1}, {-1, -1}, {}, 0});
  seen.emplace(state_key(nodes[0], lifted, track_cover), 0);
  auto goal = [&](const Node& n) {
    return n.t == target && (!track_cover || std::includes(n.covered.begin(), n.covered.end(), lifted.begin(), lifted.end()));
  };
  std::deque<std::size_t> queue = {0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    out.depth_reached = std::max(out.depth_reached, nodes[cur].depth);
    if (goal(nodes[cur])) {
      out.path = unwind(nodes, cur);
      out.nodes_explored = nodes.size();
      return out;
    }
    if (nodes[cur].depth >= bounds.max_depth) {
      out.bounds_hit = true;
      continue;
    }
    std::vector<Edge> candidates = nodes[cur].t.interior_edges();
    std::sort(candidates.begin(), candidates.end(), [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
    for (const auto& e : candidates) {
      if (curve_type(nodes[cur].t, e).kind != CurveKind::Flop) continue;
      auto [next_t, created] = flip(nodes[cur].t, e.a, e.b);
      Node next{std::move(next_t), nodes[cur].labels, nodes[cur].covered, cur, e.key(), created, {}, nodes[cur].depth + 1};
      next.label = next.labels.at(e.key());
      next.labels.erase(e.key());
      next.labels[created] = next.label;
      if (lifted.count(next.label)) next.covered.insert(next.label);
      auto key = state_key(next, lifted, track_cover);
      if (seen.count(key)) continue;
      if (track_cover && on_path(nodes, cur, next.t)) continue;
      if (nodes.size() >= bounds.max_nodes) {
        out.bounds_hit = true;
        out.nodes_explored = nodes.size();
        return out;
      }
      seen.emplace(std::move(key), nodes.size());
      queue.push_back(nodes.size());
      nodes.push_back(std::move(next));
    }
  }
  out.nodes_explored = nodes.size();
  return out;
}

bool segments_cross(const IVec3& a, const IVec3& b, const IVec3& c, const IVec3& d) {
  auto orient = [](const IVec3& p, const IVec3& q, const IVec3& r) {
    Int v = checked_sub(checked_mul(q[0] - p[0], r[1] - p[1]), checked_mul(q[1] - p[1], r[0] - p[0]));
    return (v > 0) - (v < 0);
  };
  if (a == c || a == d || b == c || b == d) return false;
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

std::size_t crossings(const Triangulation& t, const EdgeKey& e, const Triangulation& target) {
  const auto& v = t.vertices();
  std::size_t n = 0;
  for (const auto& f : target.interior_edges()) {
    n += segments_cross(v[static_cast<std::size_t>(e.first)], v[static_cast<std::size_t>(e.second)], v[static_cast<std::size_t>(f.a)],
                        v[static_cast<std::size_t>(f.b)]);
  }
  return n;
}

// Repeatedly flips the (-1,-1) edge whose flip removes the most crossings
// with the target. Returns nullopt if no flip reduces them.
std::optional<FlipPath> directed_path(const Triangulation& start, const EdgeLabels& start_labels, const Triangulation& target) {
  FlipPath path;
  Triangulation t = start;
  EdgeLabels labels = start_labels;
  while (!(t == target)) {
    std::optional<std::pair<long, EdgeKey>> best;
    for (const auto& e : t.interior_edges()) {
      if (target.has_edge(e.a, e.b) || curve_type(t, e).kind != CurveKind::Flop) continue;
      EdgeKey other{t.apex(e, 0), t.apex(e, 1)};
      if (other.first > other.second) std::swap(other.first, other.second);
      long delta = static_cast<long>(crossings(t, other, target)) - static_cast<long>(crossings(t, e.key(), target));
      if (!best || std::make_pair(delta, e.key()) < *best) best = std::make_pair(delta, e.key());
    }
    if (!best || best->first >= 0) return std::nullopt;
    auto [next, created] = flip(t, best->second.first, best->second.second);
    Character label = labels.at(best->second);
    path.steps.push_back({t, best->second, created, label});
    path.chi_gamma.insert(label);
    labels.erase(best->second);
    labels[created] = label;
    t = std::move(next);
  }
  return path;
}

}  // namespace

std::set<Character> edge_diff_labels(const Triangulation& ghilb, const ReidLabels& labels, const Triangulation& target) {
  if (ghilb.vertices() != target.vertices() || !(ghilb.lattice() == target.lattice())) {
    throw TriangulationError("edge_diff_labels: triangulations have different vertex sets");
  }
  std::set<Character> out;
  for (const auto& e : ghilb.interior_edges()) {
    if (!target.has_edge(e.a, e.b)) out.insert(labels.edge_labels.at(e.key()));
  }
  return out;
}

std::vector<Character> lifted_nontrivial(const SubgroupSpec& subgroup) {
  std::vector<Character> out;
  for (const auto& c : subgroup.lifted) {
    if (c.index != 0) out.push_back(c);
  }
  return out;
}

Triangulation target_triangulation(const GroupAction& group, const SubgroupSpec& subgroup) {
  return iterated_hilb(make_chain(group, {subgroup}));
}

bool corollary_check(const GroupAction& group, const SubgroupSpec& subgroup) {
  auto recipe = reid_recipe(group);
  auto diff = edge_diff_labels(recipe.triangulation, recipe.labels, target_triangulation(group, subgroup));
  auto lifted = lifted_nontrivial(subgroup);
  return std::all_of(lifted.begin(), lifted.end(), [&](const Character& c) { return diff.count(c) > 0; });
}

SearchOutcome search_path(const GroupAction& group, const SubgroupSpec& subgroup, const SearchBounds& bounds) {
  auto recipe = reid_recipe(group);
  auto target = target_triangulation(group, subgroup);
  auto lifted_v = lifted_nontrivial(subgroup);
  std::set<Character> lifted(lifted_v.begin(), lifted_v.end());
  auto covers = [&](const FlipPath& p) { return std::includes(p.chi_gamma.begin(), p.chi_gamma.end(), lifted.begin(), lifted.end()); };
  // Every G-Hilb edge missing from the target is flopped at least once, first
  // with its original label. So any path to the target has at least that many
  // steps and its labels contain theirs.
  std::size_t lower_bound = 0;
  for (const auto& e : recipe.triangulation.interior_edges()) lower_bound += target.has_edge(e.a, e.b) ? 0 : 1;

  auto direct = directed_path(recipe.triangulation, recipe.labels.edge_labels, target);
  if (direct && direct->steps.size() == lower_bound && covers(*direct)) {
    SearchOutcome out;
    out.depth_reached = lower_bound;
    out.path = std::move(direct);
    out.shortest = true;
    return out;
  }
  auto plain = bfs(recipe.triangulation, recipe.labels.edge_labels, target, lifted, false, bounds);
  SearchOutcome out = plain;
  if (!(plain.path && covers(*plain.path)) && (plain.path || plain.bounds_hit)) {
    out = bfs(recipe.triangulation, recipe.labels.edge_labels, target, lifted, true, bounds);
    out.nodes_explored += plain.nodes_explored;
  }
  out.shortest = out.path.has_value();
  if (!out.path && direct && covers(*direct)) {
    out.path = std::move(direct);
    out.shortest = false;
  }
  return out;
}

std::string method_name(Method method) {
  switch (method) {
    case Method::CorollaryFastPath: return "CorollaryFastPath";
    case Method::PathSearch: return "PathSearch";
    case Method::Failed: return "Failed";
  }
  return "?";
}

ConjectureReport conjecture_report(const GroupAction& group, const SubgroupSpec& subgroup, const SearchBounds& bounds) {
  ConjectureReport report{group, subgroup};
  auto census = wall_census(group);
  auto target = target_triangulation(group, subgroup);
  report.lifted = lifted_nontrivial(subgroup);
  report.edge_diff = edge_diff_labels(census.triangulation, census.labels, target);

  for (const auto& c : report.lifted) {
    for (const auto& [v, vl] : census.labels.vertex_labels) {
      if (std::find(vl.characters.begin(), vl.characters.end(), c) != vl.characters.end()) {
        report.lifted_on_divisors.push_back(c);
        break;
      }
    }
    for (const auto& ls : census.long_sides) {
      if (ls.label == c) {
        report.lifted_on_long_sides.push_back(c);
        break;
      }
    }
  }

  bool fast = std::all_of(report.lifted.begin(), report.lifted.end(), [&](const Character& c) { return report.edge_diff.count(c) > 0; });
  report.search = search_path(group, subgroup, bounds);
  if (report.search.path) {
    report.path = report.search.path;
    report.chi_gamma = report.path->chi_gamma;
    report.target_reached = true;
    if (!report.path->steps.empty()) {
      Int lifted_steps = 0;
      for (const auto& s : report.path->steps) {
        lifted_steps += std::find(report.lifted.begin(), report.lifted.end(), s.label) != report.lifted.end() ? 1 : 0;
      }
      report.lifted_step_fraction = Rational(lifted_steps, static_cast<Int>(report.path->steps.size()));
    }
  }
  if (fast) {
    report.method = Method::CorollaryFastPath;
    report.verified = true;
  } else if (report.path) {
    report.method = Method::PathSearch;
    report.verified = true;
  } else {
    report.method = Method::Failed;
  }

  report.notes.push_back("paths are flip sequences; crossings of divisor walls are not modelled");
  report.notes.push_back("every flip sequence is assumed realisable by a path avoiding walls of type III");
  report.notes.push_back("divisor wall labels met along a path are not added to chi(gamma)");
  if (fast && !report.path) report.notes.push_back("no certificate path within the search bounds; verdict from the corollary");
  if (!report.verified && report.search.bounds_hit) report.notes.push_back("search bounds exhausted");
  return report;
}

}  // namespace mckay
