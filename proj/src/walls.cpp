#include "mckay/walls.hpp"

#include <algorithm>
#include <map>

#include "mckay/nakamura.hpp"

namespace mckay {

namespace {

EdgeKey key_of(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

IVec3 at(const IVec3& p, const IVec3& u, const IVec3& w, Int i, Int j) { return add(p, add(scale(u, i), scale(w, j))); }

// Grid vertex indices of the side-n triangle at p spanned by u, w, or empty
// when the standard subdivision is not present.
std::map<std::pair<Int, Int>, int> subdivision(const Triangulation& t, const IVec3& p, const IVec3& u, const IVec3& w, Int n) {
  std::map<std::pair<Int, Int>, int> grid;
  for (Int i = 0; i <= n; ++i) {
    for (Int j = 0; i + j <= n; ++j) {
      int v = t.vertex_index(at(p, u, w, i, j));
      if (v < 0) return {};
      grid[{i, j}] = v;
    }
  }
  for (Int i = 0; i <= n; ++i) {
    for (Int j = 0; i + j < n; ++j) {
      if (!t.has_edge(grid[{i, j}], grid[{i + 1, j}]) || !t.has_edge(grid[{i, j}], grid[{i, j + 1}]) ||
          !t.has_edge(grid[{i + 1, j}], grid[{i, j + 1}])) {
        return {};
      }
    }
  }
  return grid;
}

bool same_side(Int i1, Int j1, Int i2, Int j2, Int n) {
  return (i1 == 0 && i2 == 0) || (j1 == 0 && j2 == 0) || (i1 + j1 == n && i2 + j2 == n);
}

bool collinear(const Triangulation& t, int a, int b, int c) {
  const auto& v = t.vertices();
  IVec3 d1 = sub(v[static_cast<std::size_t>(b)], v[static_cast<std::size_t>(a)]);
  IVec3 d2 = sub(v[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(b)]);
  return cross(d1, d2) == IVec3{0, 0, 0} && dot(d1, d2) > 0;
}

}  // namespace

std::vector<RegularTriangle> regular_triangles(const Triangulation& t) {
  std::map<std::pair<std::array<int, 3>, Int>, RegularTriangle> found;
  const auto& verts = t.vertices();
  for (const auto& tri : t.triangles()) {
    for (int c = 0; c < 3; ++c) {
      int p = tri[static_cast<std::size_t>(c)];
      int q = tri[static_cast<std::size_t>((c + 1) % 3)];
      int r = tri[static_cast<std::size_t>((c + 2) % 3)];
      const IVec3& pv = verts[static_cast<std::size_t>(p)];
      IVec3 u = sub(verts[static_cast<std::size_t>(q)], pv);
      IVec3 w = sub(verts[static_cast<std::size_t>(r)], pv);
      Int n = 1;
      std::map<std::pair<Int, Int>, int> grid;
      for (;;) {
        auto next = subdivision(t, pv, u, w, n + 1);
        if (next.empty()) break;
        grid = std::move(next);
        ++n;
      }
      if (n < 2) continue;
      std::array<int, 3> corners = {p, grid[{n, 0}], grid[{0, n}]};
      std::sort(corners.begin(), corners.end());
      if (found.count({corners, n})) continue;

      RegularTriangle rt;
      rt.anchor = p;
      rt.u = u;
      rt.w = w;
      rt.side = n;
      std::set<EdgeKey> inside;
      for (Int i = 0; i <= n; ++i) {
        for (Int j = 0; i + j < n; ++j) {
          const std::array<std::array<Int, 4>, 3> steps = {{{i, j, i + 1, j}, {i, j, i, j + 1}, {i + 1, j, i, j + 1}}};
          for (const auto& s : steps) {
            if (same_side(s[0], s[1], s[2], s[3], n)) continue;
            inside.insert(key_of(grid[{s[0], s[1]}], grid[{s[2], s[3]}]));
          }
        }
      }
      rt.interior_edges.assign(inside.begin(), inside.end());
      found.emplace(std::make_pair(corners, n), std::move(rt));
    }
  }
  std::vector<RegularTriangle> out;
  for (auto& [k, rt] : found) out.push_back(std::move(rt));
  return out;
}

std::set<EdgeKey> edges_inside_regular_triangles(const Triangulation& t) {
  std::set<EdgeKey> out;
  for (const auto& rt : regular_triangles(t)) out.insert(rt.interior_edges.begin(), rt.interior_edges.end());
  return out;
}

std::vector<EdgeKey> final_curves(const Triangulation& t, const GeneralisedLongSide& side) {
  (void)t;
  std::set<EdgeKey> out;
  const auto& segs = side.segments;
  if (segs.empty()) return {};
  if (segs.size() == 1) {
    const auto& s = segs.front();
    out.insert(key_of(s[0], s[1]));
    out.insert(key_of(s[s.size() - 2], s.back()));
  } else {
    const auto& first = segs.front();
    const auto& last = segs.back();
    out.insert(key_of(first[first.size() - 2], first.back()));
    out.insert(key_of(last[0], last[1]));
  }
  return {out.begin(), out.end()};
}

std::vector<GeneralisedLongSide> generalised_long_sides(const Triangulation& t, const ReidLabels& labels) {
  auto inside = edges_inside_regular_triangles(t);
  std::map<Character, std::vector<EdgeKey>> chains;
  for (const auto& [k, chi] : labels.edge_labels) chains[chi].push_back(k);

  std::vector<GeneralisedLongSide> out;
  for (const auto& [chi, edges] : chains) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::set<int> done;
    for (const auto& [start, nb] : adj) {
      if (done.count(start)) continue;
      // connected component
      std::vector<int> comp = {start};
      done.insert(start);
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (int w : adj[comp[i]]) {
          if (done.insert(w).second) comp.push_back(w);
        }
      }
      std::vector<int> ends;
      bool simple = true;
      for (int v : comp) {
        std::size_t deg = adj[v].size();
        if (deg == 1) ends.push_back(v);
        if (deg > 2) simple = false;
        if (deg == 2 && t.is_boundary_vertex(v)) simple = false;
        auto vl = labels.vertex_labels.find(v);
        if (vl != labels.vertex_labels.end() && vl->second.rule == VertexRule::Champions) simple = false;
      }
      if (!simple || ends.size() != 2) continue;
      if (!t.is_boundary_vertex(ends[0]) || !t.is_boundary_vertex(ends[1])) continue;

      GeneralisedLongSide ls;
      ls.label = chi;
      ls.path = {std::min(ends[0], ends[1])};
      for (int prev = -1; ls.path.size() < comp.size();) {
        int cur = ls.path.back();
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        ls.path.push_back(next);
      }
      bool regular = true;
      for (std::size_t i = 0; i + 1 < ls.path.size(); ++i) {
        auto k = key_of(ls.path[i], ls.path[i + 1]);
        ls.edges.push_back(k);
        if (inside.count(k)) regular = false;
      }
      if (!regular) continue;

      ls.segments.push_back({ls.path[0], ls.path[1]});
      for (std::size_t i = 2; i < ls.path.size(); ++i) {
        auto& seg = ls.segments.back();
        if (collinear(t, seg[seg.size() - 2], seg.back(), ls.path[i])) {
          seg.push_back(ls.path[i]);
        } else {
          ls.segments.push_back({ls.path[i - 1], ls.path[i]});
        }
      }
      ls.final_edges = final_curves(t, ls);
      out.push_back(std::move(ls));
    }
  }
  return out;
}

std::string wall_type_name(WallType type) {
  switch (type) {
    case WallType::Divisor: return "Divisor";
    case WallType::FlopCurve: return "FlopCurve";
    case WallType::LongSide: return "LongSide";
  }
  return "?";
}

std::size_t WallCensus::count(WallType type) const {
  return static_cast<std::size_t>(std::count_if(walls.begin(), walls.end(), [&](const Wall& w) { return w.type == type; }));
}

WallCensus wall_census(const Triangulation& ghilb, const ReidLabels& labels) {
  WallCensus census{ghilb, labels, generalised_long_sides(ghilb, labels), {}};
  for (const auto& [v, vl] : labels.vertex_labels) {
    Wall w;
    w.type = WallType::Divisor;
    w.vertex = v;
    w.labels = vl.characters;
    census.walls.push_back(std::move(w));
  }
  for (const auto& e : ghilb.interior_edges()) {
    if (curve_type(ghilb, e).kind != CurveKind::Flop) continue;
    Wall w;
    w.type = WallType::FlopCurve;
    w.edge = e.key();
    w.labels = {labels.edge_labels.at(e.key())};
    for (std::size_t i = 0; i < census.long_sides.size(); ++i) {
      const auto& f = census.long_sides[i].final_edges;
      if (std::find(f.begin(), f.end(), e.key()) != f.end()) w.also_final_of = i;
    }
    census.walls.push_back(std::move(w));
  }
  for (std::size_t i = 0; i < census.long_sides.size(); ++i) {
    Wall w;
    w.type = WallType::LongSide;
    w.long_side = i;
    w.labels = {census.long_sides[i].label};
    census.walls.push_back(std::move(w));
  }
  return census;
}

WallCensus wall_census(const GroupAction& group) {
  auto recipe = reid_recipe(group);
  return wall_census(recipe.triangulation, recipe.labels);
}

}  // namespace mckay
