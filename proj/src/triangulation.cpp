#include "mckay/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace mckay {

namespace {

Triangle sorted_triangle(int a, int b, int c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

// The junior simplex is drawn in the (x, y) coordinates of its scaled points.
Int orient2d(const IVec3& p, const IVec3& q, const IVec3& r) {
  return checked_sub(checked_mul(q[0] - p[0], r[1] - p[1]), checked_mul(q[1] - p[1], r[0] - p[0]));
}

}  // namespace

std::array<IVec3, 3> scaled_corners(Int d) { return {IVec3{d, 0, 0}, IVec3{0, d, 0}, IVec3{0, 0, d}}; }

std::vector<IVec3> crepant_vertex_set(const GroupAction& group) {
  Int d = group.denominator();
  std::vector<IVec3> out;
  for (const auto& c : scaled_corners(d)) out.push_back(c);
  for (const auto& p : junior_elements(group)) out.push_back(p.scaled_to(d));
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation::Triangulation(Lattice lattice, std::vector<IVec3> scaled_vertices, std::vector<Triangle> triangles)
    : lattice_(std::move(lattice)) {
  std::vector<std::size_t> order(scaled_vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scaled_vertices[a] < scaled_vertices[b]; });
  std::vector<int> remap(scaled_vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<int>(i);
    vertices_.push_back(scaled_vertices[order[i]]);
  }
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw TriangulationError("duplicate vertex in triangulation");
  }
  for (const auto& t : triangles) {
    for (int v : t) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) throw TriangulationError("triangle vertex out of range");
    }
    triangles_.push_back(sorted_triangle(remap[static_cast<std::size_t>(t[0])], remap[static_cast<std::size_t>(t[1])],
                                         remap[static_cast<std::size_t>(t[2])]));
  }
  std::sort(triangles_.begin(), triangles_.end());
  build_edges();
}

void Triangulation::build_edges() {
  std::map<EdgeKey, Edge> acc;
  for (std::size_t ti = 0; ti < triangles_.size(); ++ti) {
    const auto& t = triangles_[ti];
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        auto key = edge_key(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
        auto& e = acc[key];
        e.a = key.first;
        e.b = key.second;
        if (e.triangle_count >= 2) throw TriangulationError("edge shared by more than two triangles");
        e.triangles[static_cast<std::size_t>(e.triangle_count++)] = static_cast<int>(ti);
      }
    }
  }
  for (auto& [key, e] : acc) {
    edge_index_[key] = edges_.size();
    edges_.push_back(e);
  }
}

int Triangulation::vertex_index(const IVec3& scaled) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), scaled);
  if (it == vertices_.end() || *it != scaled) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Triangulation::vertex_index(const RatVec3& point) const {
  if (!point.integral_at(denominator())) return -1;
  return vertex_index(point.scaled_to(denominator()));
}

std::optional<Edge> Triangulation::find_edge(int a, int b) const {
  auto it = edge_index_.find(edge_key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return edges_[it->second];
}

std::vector<Edge> Triangulation::interior_edges() const {
  std::vector<Edge> out;
  for (const auto& e : edges_) {
    if (e.interior()) out.push_back(e);
  }
  return out;
}

bool Triangulation::is_boundary_vertex(int vertex) const {
  const auto& v = vertices_[static_cast<std::size_t>(vertex)];
  return v[0] == 0 || v[1] == 0 || v[2] == 0;
}

bool Triangulation::is_corner(int vertex) const {
  const auto& v = vertices_[static_cast<std::size_t>(vertex)];
  int zeros = (v[0] == 0) + (v[1] == 0) + (v[2] == 0);
  return zeros == 2;
}

std::vector<int> Triangulation::neighbours(int vertex) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.a == vertex) out.push_back(e.b);
    if (e.b == vertex) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Triangulation::apex(const Edge& edge, int side) const {
  const auto& t = triangles_[static_cast<std::size_t>(edge.triangles[static_cast<std::size_t>(side)])];
  for (int v : t) {
    if (v != edge.a && v != edge.b) return v;
  }
  throw TriangulationError("degenerate triangle");
}

std::string Triangulation::canonical_key() const {
  std::ostringstream os;
  os << denominator() << '|';
  for (const auto& v : vertices_) os << v[0] << ',' << v[1] << ',' << v[2] << ';';
  os << '|';
  for (const auto& t : triangles_) os << t[0] << ',' << t[1] << ',' << t[2] << ';';
  return os.str();
}

std::string Triangulation::vertex_name(int vertex) const { return to_string(point(vertex)); }

void Triangulation::validate() const {
  Int d = denominator();
  for (const auto& v : vertices_) {
    if (v[0] < 0 || v[1] < 0 || v[2] < 0 || sum(v) != d) {
      throw TriangulationError("vertex " + to_string(v) + " is not on the junior simplex");
    }
    if (!lattice_.contains_scaled(v)) throw TriangulationError("vertex " + to_string(v) + " is not a lattice point");
  }
  Int total = 0;
  for (const auto& t : triangles_) {
    Int det = std::abs(det3(vertices_[static_cast<std::size_t>(t[0])], vertices_[static_cast<std::size_t>(t[1])],
                            vertices_[static_cast<std::size_t>(t[2])]));
    if (det != lattice_.scaled_covolume()) {
      throw TriangulationError("triangle (" + vertex_name(t[0]) + ", " + vertex_name(t[1]) + ", " + vertex_name(t[2]) +
                               ") is not unimodular");
    }
    total = checked_add(total, det);
  }
  if (total != checked_mul(checked_mul(d, d), d)) throw TriangulationError("triangles do not cover the junior simplex");
  for (const auto& e : edges_) {
    const auto& p = vertices_[static_cast<std::size_t>(e.a)];
    const auto& q = vertices_[static_cast<std::size_t>(e.b)];
    if (e.triangle_count == 1) {
      bool on_side = false;
      for (int i = 0; i < 3; ++i) on_side = on_side || (p[static_cast<std::size_t>(i)] == 0 && q[static_cast<std::size_t>(i)] == 0);
      if (!on_side) throw TriangulationError("free edge " + vertex_name(e.a) + "-" + vertex_name(e.b) + " inside the simplex");
    } else {
      Int s0 = orient2d(p, q, vertices_[static_cast<std::size_t>(apex(e, 0))]);
      Int s1 = orient2d(p, q, vertices_[static_cast<std::size_t>(apex(e, 1))]);
      if ((s0 > 0) == (s1 > 0)) throw TriangulationError("overlapping triangles at edge " + vertex_name(e.a) + "-" + vertex_name(e.b));
    }
  }
}

// ---------------------------------------------------------------------------
// Curves and flips

std::string CurveType::name() const {
  switch (kind) {
    case CurveKind::Flop:
      return "(-1,-1)";
    case CurveKind::Rigid:
      return "(0,-2)";
    case CurveKind::Wide:
      return "(1,-" + std::to_string(wide_degree()) + ")";
  }
  return "?";
}

CurveType curve_type(const Triangulation& t, const Edge& edge) {
  if (!edge.interior()) throw TriangulationError("curve_type: boundary edge");
  const auto& v1 = t.vertices()[static_cast<std::size_t>(edge.a)];
  const auto& v2 = t.vertices()[static_cast<std::size_t>(edge.b)];
  IVec3 s = add(t.vertices()[static_cast<std::size_t>(t.apex(edge, 0))], t.vertices()[static_cast<std::size_t>(t.apex(edge, 1))]);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      Int minor = v1[ui] * v2[uj] - v1[uj] * v2[ui];
      if (minor == 0) continue;
      Int an = s[ui] * v2[uj] - s[uj] * v2[ui];
      Int bn = v1[ui] * s[uj] - v1[uj] * s[ui];
      if (an % minor != 0 || bn % minor != 0) throw TriangulationError("curve_type: apex relation is not integral");
      CurveType c;
      c.alpha = an / minor;
      c.beta = bn / minor;
      if (add(scale(v1, c.alpha), scale(v2, c.beta)) != s) throw TriangulationError("curve_type: apexes not coplanar with edge");
      if (c.alpha == 1 && c.beta == 1) {
        c.kind = CurveKind::Flop;
      } else if ((c.alpha == 0 && c.beta == 2) || (c.alpha == 2 && c.beta == 0)) {
        c.kind = CurveKind::Rigid;
      } else {
        c.kind = CurveKind::Wide;
      }
      return c;
    }
  }
  throw TriangulationError("curve_type: degenerate edge");
}

CurveType curve_type(const Triangulation& t, int a, int b) {
  auto e = t.find_edge(a, b);
  if (!e) throw TriangulationError("no edge " + t.vertex_name(a) + "-" + t.vertex_name(b));
  return curve_type(t, *e);
}

bool is_floppable(const Triangulation& t, int a, int b) {
  auto e = t.find_edge(a, b);
  return e && e->interior() && curve_type(t, *e).kind == CurveKind::Flop;
}

std::pair<Triangulation, EdgeKey> flip(const Triangulation& t, int a, int b) {
  auto e = t.find_edge(a, b);
  if (!e || !e->interior()) throw NotFloppable("edge is not an interior edge");
  if (curve_type(t, *e).kind != CurveKind::Flop) throw NotFloppable("edge " + t.vertex_name(a) + "-" + t.vertex_name(b) + " is not a (-1,-1) curve");
  int w1 = t.apex(*e, 0);
  int w2 = t.apex(*e, 1);
  std::vector<Triangle> tris;
  for (std::size_t i = 0; i < t.triangles().size(); ++i) {
    if (static_cast<int>(i) == e->triangles[0] || static_cast<int>(i) == e->triangles[1]) continue;
    tris.push_back(t.triangles()[i]);
  }
  tris.push_back(sorted_triangle(w1, w2, e->a));
  tris.push_back(sorted_triangle(w1, w2, e->b));
  return {Triangulation(t.lattice(), t.vertices(), std::move(tris)), edge_key(w1, w2)};
}

std::optional<std::size_t> FlipGraph::find(const Triangulation& t) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == t) return i;
  }
  return std::nullopt;
}

FlipGraph flip_graph(const Triangulation& start, std::size_t max_nodes) {
  FlipGraph g;
  std::map<std::vector<Triangle>, std::size_t> index;
  g.nodes.push_back(start);
  index[start.triangles()] = 0;
  for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
    // Copy: g.nodes may reallocate below.
    Triangulation node = g.nodes[cur];
    for (const auto& e : node.interior_edges()) {
      if (curve_type(node, e).kind != CurveKind::Flop) continue;
      auto [next, created] = flip(node, e.a, e.b);
      auto it = index.find(next.triangles());
      std::size_t to;
      if (it == index.end()) {
        if (g.nodes.size() >= max_nodes) {
          g.truncated = true;
          continue;
        }
        to = g.nodes.size();
        index[next.triangles()] = to;
        g.nodes.push_back(std::move(next));
      } else {
        to = it->second;
      }
      g.edges.push_back({cur, to, e.key(), created});
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

namespace {

struct TilingSearch {
  std::vector<IVec3> pts;
  std::vector<Triangle> candidates;              // stored counter-clockwise
  std::map<EdgeKey, std::vector<std::size_t>> by_edge;
  std::vector<std::size_t> placed;
  std::set<std::pair<int, int>> frontier;       // directed, uncovered region on the left
  std::vector<std::vector<Triangle>> results;
  Int target = 0;

  bool overlaps(const Triangle& s, const Triangle& t) const {
    auto separated_by = [&](const Triangle& a, const Triangle& b) {
      for (int i = 0; i < 3; ++i) {
        const auto& p = pts[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        const auto& q = pts[static_cast<std::size_t>(a[static_cast<std::size_t>((i + 1) % 3)])];
        bool all_out = true;
        for (int v : b) all_out = all_out && orient2d(p, q, pts[static_cast<std::size_t>(v)]) <= 0;
        if (all_out) return true;
      }
      return false;
    };
    return !separated_by(s, t) && !separated_by(t, s);
  }

  void toggle(int from, int to) {
    // Closing an edge shared with the new triangle, or opening a new one.
    if (frontier.erase({to, from}) == 0) frontier.insert({from, to});
  }

  void run() {
    if (frontier.empty()) {
      if (static_cast<Int>(placed.size()) == target) {
        std::vector<Triangle> tris;
        for (auto i : placed) tris.push_back(sorted_triangle(candidates[i][0], candidates[i][1], candidates[i][2]));
        results.push_back(std::move(tris));
      }
      return;
    }
    if (static_cast<Int>(placed.size()) >= target) return;
    auto [a, b] = *frontier.begin();
    auto it = by_edge.find(edge_key(a, b));
    if (it == by_edge.end()) return;
    for (auto ci : it->second) {
      const auto& t = candidates[ci];
      int c = t[0] + t[1] + t[2] - a - b;
      if (orient2d(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)], pts[static_cast<std::size_t>(c)]) <= 0) continue;
      bool ok = true;
      for (auto pi : placed) {
        if (overlaps(t, candidates[pi])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      auto saved = frontier;
      frontier.erase({a, b});
      toggle(c, b);  // uncovered side of b→c is on the left of c→b
      toggle(a, c);
      placed.push_back(ci);
      run();
      placed.pop_back();
      frontier = std::move(saved);
    }
  }
};

}  // namespace

std::vector<Triangulation> brute_force_triangulations(const GroupAction& group, Int guard) {
  if (group.order() > guard) {
    throw TriangulationError("brute force enumeration guard exceeded: |G| = " + std::to_string(group.order()) + " > " +
                             std::to_string(guard));
  }
  Lattice lattice = group.lattice();
  Int d = lattice.denominator();
  TilingSearch s;
  for (const auto& p : crepant_vertex_set(group)) {
    // crepant_vertex_set is at group.denominator(); the lattice may have the same denominator
    s.pts.push_back(RatVec3::make(p, group.denominator()).scaled_to(d));
  }
  std::sort(s.pts.begin(), s.pts.end());
  s.target = group.order();
  int n = static_cast<int>(s.pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Int det = det3(s.pts[static_cast<std::size_t>(i)], s.pts[static_cast<std::size_t>(j)], s.pts[static_cast<std::size_t>(k)]);
        if (std::abs(det) != lattice.scaled_covolume()) continue;
        Triangle t{i, j, k};
        if (orient2d(s.pts[static_cast<std::size_t>(i)], s.pts[static_cast<std::size_t>(j)], s.pts[static_cast<std::size_t>(k)]) < 0) std::swap(t[1], t[2]);
        std::size_t idx = s.candidates.size();
        s.candidates.push_back(t);
        s.by_edge[edge_key(i, j)].push_back(idx);
        s.by_edge[edge_key(j, k)].push_back(idx);
        s.by_edge[edge_key(i, k)].push_back(idx);
      }
    }
  }
  // Outer boundary, counter-clockwise in the (x, y) picture, split at every
  // boundary lattice point.
  auto corners = scaled_corners(d);
  std::array<IVec3, 3> ccw = {corners[0], corners[1], corners[2]};
  if (orient2d(ccw[0], ccw[1], ccw[2]) < 0) std::swap(ccw[1], ccw[2]);
  for (int side = 0; side < 3; ++side) {
    const auto& p = ccw[static_cast<std::size_t>(side)];
    const auto& q = ccw[static_cast<std::size_t>((side + 1) % 3)];
    std::vector<std::pair<Int, int>> on_side;
    for (int i = 0; i < n; ++i) {
      const auto& v = s.pts[static_cast<std::size_t>(i)];
      if (orient2d(p, q, v) != 0) continue;
      // parameter along p→q
      IVec3 pv = sub(v, p);
      IVec3 pq = sub(q, p);
      on_side.push_back({dot(pv, pq), i});
    }
    std::sort(on_side.begin(), on_side.end());
    for (std::size_t i = 0; i + 1 < on_side.size(); ++i) s.frontier.insert({on_side[i].second, on_side[i + 1].second});
  }
  s.run();

  std::vector<Triangulation> out;
  std::sort(s.results.begin(), s.results.end());
  for (auto& tris : s.results) out.emplace_back(lattice, s.pts, std::move(tris));
  return out;
}

}  // namespace mckay
