#include "mckay/reid.hpp"

#include <algorithm>
#include <set>

#include "mckay/nakamura.hpp"

namespace mckay {

namespace {

EdgeKey key_of(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

IVec3 positive_part(const IVec3& v) { return {std::max<Int>(v[0], 0), std::max<Int>(v[1], 0), std::max<Int>(v[2], 0)}; }

Int degree(const IVec3& m) { return m[0] + m[1] + m[2]; }

bool parallel(const IVec3& a, const IVec3& b) { return cross(a, b) == IVec3{0, 0, 0}; }

}  // namespace

std::vector<StraightLine> straight_lines(const Triangulation& t) {
  std::set<EdgeKey> seen;
  std::vector<StraightLine> lines;
  const auto& verts = t.vertices();
  // next vertex continuing the direction from `from` through `at`
  auto continue_from = [&](int from, int at) -> int {
    IVec3 dir = sub(verts[static_cast<std::size_t>(at)], verts[static_cast<std::size_t>(from)]);
    for (int w : t.neighbours(at)) {
      if (w == from) continue;
      IVec3 d = sub(verts[static_cast<std::size_t>(w)], verts[static_cast<std::size_t>(at)]);
      if (parallel(dir, d) && dot(dir, d) > 0) {
        auto e = t.find_edge(at, w);
        if (e && e->interior()) return w;
      }
    }
    return -1;
  };
  for (const auto& e : t.interior_edges()) {
    if (seen.count(e.key())) continue;
    std::vector<int> forward = {e.a, e.b};
    for (int w = continue_from(e.a, e.b); w >= 0; w = continue_from(forward[forward.size() - 2], forward.back())) {
      forward.push_back(w);
    }
    std::vector<int> backward;
    for (int prev = e.b, cur = e.a, w = continue_from(prev, cur); w >= 0; prev = cur, cur = w, w = continue_from(prev, cur)) {
      backward.push_back(w);
    }
    StraightLine line;
    line.vertices.assign(backward.rbegin(), backward.rend());
    line.vertices.insert(line.vertices.end(), forward.begin(), forward.end());
    if (line.vertices.front() > line.vertices.back()) std::reverse(line.vertices.begin(), line.vertices.end());
    for (std::size_t i = 0; i + 1 < line.vertices.size(); ++i) {
      auto k = key_of(line.vertices[i], line.vertices[i + 1]);
      line.edges.push_back(k);
      seen.insert(k);
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end(), [](const StraightLine& a, const StraightLine& b) { return a.edges < b.edges; });
  return lines;
}

MonomialPair edge_pair(const Triangulation& t, const Edge& edge, const GroupAction& group) {
  if (!edge.interior()) throw std::invalid_argument("edge_pair: boundary edge");
  IVec3 n = primitive_integer(cross(t.vertices()[static_cast<std::size_t>(edge.a)], t.vertices()[static_cast<std::size_t>(edge.b)]));
  Int bound = 2 * group.denominator();
  for (Int k = 1;; ++k) {
    IVec3 kn = scale(n, k);
    IVec3 p = positive_part(kn);
    IVec3 q = positive_part(scale(kn, -1));
    if (std::max(degree(p), degree(q)) > bound) {
      throw NoPairFound("no monomial pair for edge " + t.vertex_name(edge.a) + "-" + t.vertex_name(edge.b) +
                        " within degree " + std::to_string(bound));
    }
    if (group.character_of(kn) != group.trivial_character()) continue;
    if (std::make_pair(degree(q), q) < std::make_pair(degree(p), p)) std::swap(p, q);
    return {p, q, group.character_of(p)};
  }
}

Character label_edge(const Triangulation& t, const Edge& edge, const GroupAction& group) {
  return edge_pair(t, edge, group).character;
}

VertexLabel label_vertex(const Triangulation& t, int vertex, const EdgeLabels& edge_labels, const GroupAction& group) {
  if (t.is_boundary_vertex(vertex)) throw std::invalid_argument("label_vertex: boundary vertex");
  auto nbrs = t.neighbours(vertex);
  std::map<Character, int> count;
  for (int w : nbrs) {
    auto it = edge_labels.find(key_of(vertex, w));
    if (it == edge_labels.end()) throw std::invalid_argument("label_vertex: unlabelled edge at " + t.vertex_name(vertex));
    ++count[it->second];
  }
  std::vector<Character> through;
  for (const auto& [chi, k] : count) {
    if (k >= 2) through.push_back(chi);
  }

  VertexLabel out;
  if (through.size() == 2) {
    out.rule = VertexRule::Lines;
    out.characters = {group.multiply(through[0], through[1])};
  } else if (through.size() == 1 && nbrs.size() == 3) {
    out.rule = VertexRule::Champions;
    out.characters = {group.multiply(through[0], through[0])};
  } else if (through.size() == 3) {
    // Characters whose G-graph monomials around the vertex span a plane.
    out.rule = VertexRule::DelPezzo;
    MonomialBox box(group);
    std::vector<GGraph> around;
    for (const auto& tri : t.triangles()) {
      if (std::find(tri.begin(), tri.end(), vertex) == tri.end()) continue;
      IVec3 centre = add(add(t.vertices()[static_cast<std::size_t>(tri[0])], t.vertices()[static_cast<std::size_t>(tri[1])]),
                         t.vertices()[static_cast<std::size_t>(tri[2])]);
      around.push_back(minimal_ggraph_perturbed(centre, {}, box));
    }
    for (const auto& chi : group.characters()) {
      std::vector<IVec3> ms;
      for (const auto& g : around) ms.push_back(g[chi]);
      bool plane = false;
      for (std::size_t a = 1; a < ms.size() && !plane; ++a) {
        for (std::size_t b = a + 1; b < ms.size() && !plane; ++b) {
          plane = !parallel(sub(ms[a], ms[0]), sub(ms[b], ms[0]));
        }
      }
      if (plane) out.characters.push_back(chi);
    }
  } else {
    throw ReidError("vertex " + t.vertex_name(vertex) + " of valency " + std::to_string(nbrs.size()) + " has " +
                    std::to_string(through.size()) + " label chains through it");
  }
  std::sort(out.characters.begin(), out.characters.end());
  out.characters.erase(std::unique(out.characters.begin(), out.characters.end()), out.characters.end());
  if (out.characters.empty() || out.characters.size() > 2) {
    throw ReidError("vertex " + t.vertex_name(vertex) + " would carry " + std::to_string(out.characters.size()) + " characters");
  }
  return out;
}

std::vector<EdgeKey> ReidLabels::edges_marked(Character chi) const {
  std::vector<EdgeKey> out;
  for (const auto& [k, c] : edge_labels) {
    if (c == chi) out.push_back(k);
  }
  return out;
}

std::vector<int> ReidLabels::vertices_marked(Character chi) const {
  std::vector<int> out;
  for (const auto& [v, l] : vertex_labels) {
    if (std::find(l.characters.begin(), l.characters.end(), chi) != l.characters.end()) out.push_back(v);
  }
  return out;
}

ReidLabels reid_labels(const Triangulation& t, const GroupAction& group) {
  ReidLabels labels;
  for (const auto& e : t.interior_edges()) {
    auto pair = edge_pair(t, e, group);
    labels.edge_labels[e.key()] = pair.character;
    labels.edge_pairs[e.key()] = pair;
  }
  for (int v = 0; v < static_cast<int>(t.vertices().size()); ++v) {
    if (!t.is_boundary_vertex(v)) labels.vertex_labels[v] = label_vertex(t, v, labels.edge_labels, group);
  }
  return labels;
}

ReidRecipe reid_recipe(const GroupAction& group) {
  auto t = ghilb(group);
  auto labels = reid_labels(t, group);
  return {std::move(t), std::move(labels)};
}

}  // namespace mckay
