#include "mckay/nakamura.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace mckay {

namespace {

IVec3 unit(int i) {
  IVec3 e{0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

// Chart points are rays u of the positive orthant; the slice point is
// u / (u1 + u2 + u3).
using RayPolygon = std::vector<IVec3>;

RayPolygon clip(const RayPolygon& poly, const IVec3& normal) {
  std::vector<Int> f(poly.size());
  bool any_out = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    f[i] = dot(normal, poly[i]);
    any_out = any_out || f[i] > 0;
  }
  if (!any_out) return poly;
  RayPolygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    std::size_t j = (i + 1) % poly.size();
    if (f[i] <= 0) out.push_back(poly[i]);
    if ((f[i] < 0 && f[j] > 0) || (f[i] > 0 && f[j] < 0)) {
      IVec3 r = add(scale(poly[i], std::abs(f[j])), scale(poly[j], std::abs(f[i])));
      out.push_back(primitive_integer(r));
    }
  }
  RayPolygon dedup;
  for (const auto& r : out) {
    if (dedup.empty() || dedup.back() != r) dedup.push_back(r);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Int orient_slice(const IVec3& a, const IVec3& b, const IVec3& c) { return det3(a, b, c); }

RayPolygon cone_of(const GGraph& graph, const MonomialBox& box) {
  RayPolygon poly = {unit(0), unit(1), unit(2)};
  std::set<IVec3> seen;
  const auto& group = box.group();
  for (const auto& chi : group.characters()) {
    const IVec3& chosen = graph[chi];
    for (const auto& e : box.candidates(chi)) {
      if (e == chosen) continue;
      IVec3 n = primitive_integer(sub(chosen, e));
      if (!seen.insert(n).second) continue;
      poly = clip(poly, n);
      if (poly.size() < 3) return poly;
    }
  }
  return poly;
}

bool full_dimensional(const RayPolygon& poly) {
  if (poly.size() < 3) return false;
  Int area = 0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) area = checked_add(area, orient_slice(poly[0], poly[i], poly[i + 1]));
  return area != 0;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_valid_ggraph(const GGraph& graph, const GroupAction& group) {
  if (static_cast<Int>(graph.size()) != group.order()) return false;
  if (graph.by_character[0] != IVec3{0, 0, 0}) return false;
  std::set<IVec3> members(graph.by_character.begin(), graph.by_character.end());
  if (static_cast<Int>(members.size()) != group.order()) return false;
  for (const auto& chi : group.characters()) {
    const auto& m = graph[chi];
    if (group.character_of(m) != chi) return false;
    for (int i = 0; i < 3; ++i) {
      auto ui = static_cast<std::size_t>(i);
      if (m[ui] < 0 || m[ui] >= group.coordinate_order(i)) return false;
      if (m[ui] > 0 && !members.count(sub(m, unit(i)))) return false;
    }
  }
  return true;
}

MonomialBox::MonomialBox(const GroupAction& group) : group_(&group) {
  for (int i = 0; i < 3; ++i) extent_[static_cast<std::size_t>(i)] = group.coordinate_order(i);
  buckets_.resize(static_cast<std::size_t>(group.order()));
  const Int ex = extent_[0], ey = extent_[1], ez = extent_[2];
  auto flat = [&](Int i, Int j, Int k) { return static_cast<std::size_t>((i * ey + j) * ez + k); };
  std::vector<char> dominated(static_cast<std::size_t>(checked_mul(checked_mul(ex, ey), ez)), 0);
  for (Int i = 0; i < ex; ++i) {
    for (Int j = 0; j < ey; ++j) {
      for (Int k = 0; k < ez; ++k) {
        IVec3 e{i, j, k};
        Character chi = group.character_of(e);
        bool dom = (chi.index == 0 && e != IVec3{0, 0, 0});
        dom = dom || (i > 0 && dominated[flat(i - 1, j, k)]) || (j > 0 && dominated[flat(i, j - 1, k)]) ||
              (k > 0 && dominated[flat(i, j, k - 1)]);
        dominated[flat(i, j, k)] = dom;
        if (!dom) buckets_[static_cast<std::size_t>(chi.index)].push_back(e);
      }
    }
  }
}

HilbContext HilbContext::standard(const GroupAction& group) {
  return HilbContext(group, {RatVec3::make(unit(0), 1), RatVec3::make(unit(1), 1), RatVec3::make(unit(2), 1)}, group.lattice());
}

HilbContext HilbContext::chart(const std::array<RatVec3, 3>& rays, const Lattice& overlattice) {
  Int common = overlattice.denominator();
  for (const auto& r : rays) common = lcm(common, r.den);
  IMat3 r_mat{};
  for (int i = 0; i < 3; ++i) r_mat[static_cast<std::size_t>(i)] = rays[static_cast<std::size_t>(i)].scaled_to(common);
  Int det = mat_det(r_mat);
  if (det == 0) throw HilbError("chart rays are linearly dependent");
  Int sign = det < 0 ? -1 : 1;
  Int adet = std::abs(det);
  // Chart coordinates of the overlattice basis: y = Σ c_i r_i with c = num / det.
  std::vector<IVec3> gens;
  for (const auto& row : overlattice.basis()) {
    IVec3 y = scale(row, common / overlattice.denominator());
    IVec3 c{};
    for (int i = 0; i < 3; ++i) {
      IMat3 m = r_mat;
      m[static_cast<std::size_t>(i)] = y;
      c[static_cast<std::size_t>(i)] = checked_mul(mat_det(m), sign);
    }
    gens.push_back(c);
  }
  for (const auto& r : rays) {
    if (!overlattice.contains(r)) throw HilbError("chart ray " + to_string(r) + " is not in the overlattice");
  }
  GroupAction action = GroupAction::from_generators(adet, gens);
  return HilbContext(std::move(action), rays, overlattice);
}

RatVec3 HilbContext::to_ambient(const RatVec3& chart_point) const {
  Int common = 1;
  for (const auto& r : rays_) common = lcm(common, r.den);
  IVec3 acc{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    acc = add(acc, scale(rays_[static_cast<std::size_t>(i)].scaled_to(common), chart_point.num[static_cast<std::size_t>(i)]));
  }
  return RatVec3::make(acc, checked_mul(common, chart_point.den));
}

GGraph minimal_ggraph_at(const IVec3& v, const HilbContext& ctx) {
  if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0) throw std::invalid_argument("minimal_ggraph_at: point is not interior");
  MonomialBox box(ctx.action());
  GGraph g;
  for (const auto& chi : ctx.action().characters()) {
    const auto& cands = box.candidates(chi);
    Int best = 0;
    std::size_t best_i = cands.size();
    bool tie = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      Int w = dot(v, cands[i]);
      if (best_i == cands.size() || w < best) {
        best = w;
        best_i = i;
        tie = false;
      } else if (w == best) {
        tie = true;
      }
    }
    if (tie) {
      throw TieError("point " + to_string(v) + " is not generic: character " + ctx.action().character_name(chi) +
                     " has two minimal monomials");
    }
    g.by_character.push_back(cands[best_i]);
  }
  return g;
}

GGraph minimal_ggraph_perturbed(const IVec3& v, const std::vector<IVec3>& directions, const MonomialBox& box) {
  std::vector<IVec3> keys = {v};
  keys.insert(keys.end(), directions.begin(), directions.end());
  keys.push_back(unit(0));
  keys.push_back(unit(1));
  keys.push_back(unit(2));
  GGraph g;
  for (const auto& chi : box.group().characters()) {
    const auto& cands = box.candidates(chi);
    const IVec3* best = nullptr;
    for (const auto& e : cands) {
      if (!best) {
        best = &e;
        continue;
      }
      for (const auto& k : keys) {
        Int a = dot(k, e), b = dot(k, *best);
        if (a != b) {
          if (a < b) best = &e;
          break;
        }
      }
    }
    g.by_character.push_back(*best);
  }
  return g;
}

Cone3 ggraph_cone(const GGraph& graph, const HilbContext& ctx) {
  if (!is_valid_ggraph(graph, ctx.action())) throw std::invalid_argument("ggraph_cone: not a G-graph of the chart group");
  MonomialBox box(ctx.action());
  RayPolygon poly = cone_of(graph, box);
  if (!full_dimensional(poly)) throw EmptyInterior("G-graph cone has empty interior");
  Cone3 cone;
  for (const auto& u : poly) cone.rays.push_back(primitive(ctx.to_ambient(RatVec3::make(u, 1)), ctx.overlattice()));
  return cone;
}

std::vector<HilbCell> hilb_cells(const HilbContext& ctx, const HilbOptions& options) {
  const GroupAction& group = ctx.action();
  MonomialBox box(group);
  Int d = group.denominator();

  IVec3 seed{1, 1, 1};
  if (options.seed_denominator > 0) {
    Int s = options.seed_denominator;
    seed = {s + 3, s + 6, s + 9};
  }
  struct Pending {
    IVec3 point;
    std::vector<IVec3> directions;
  };
  std::deque<Pending> queue{{seed, {}}};
  std::set<GGraph> visited;
  std::vector<HilbCell> cells;

  while (!queue.empty()) {
    Pending p = std::move(queue.front());
    queue.pop_front();
    GGraph graph = minimal_ggraph_perturbed(p.point, p.directions, box);
    if (!visited.insert(graph).second) continue;
    RayPolygon poly = cone_of(graph, box);
    if (!full_dimensional(poly)) throw HilbError("flood fill reached a G-graph with empty interior");
    if (poly.size() != 3) throw HilbError("G-graph cone is not simplicial (" + std::to_string(poly.size()) + " rays)");

    std::array<IVec3, 3> pts{};
    for (int i = 0; i < 3; ++i) {
      const IVec3& u = poly[static_cast<std::size_t>(i)];
      Int h = sum(u);
      IVec3 scaled = scale(u, d);
      if (scaled[0] % h || scaled[1] % h || scaled[2] % h) {
        throw HilbError("cone ray " + to_string(u) + " is not a junior lattice point");
      }
      pts[static_cast<std::size_t>(i)] = {scaled[0] / h, scaled[1] / h, scaled[2] / h};
    }
    HilbCell cell;
    cell.graph = graph;
    for (int i = 0; i < 3; ++i) cell.vertices[static_cast<std::size_t>(i)] = ctx.to_ambient(RatVec3::make(pts[static_cast<std::size_t>(i)], d));
    cells.push_back(std::move(cell));

    for (int i = 0; i < 3; ++i) {
      const IVec3& a = pts[static_cast<std::size_t>(i)];
      const IVec3& b = pts[static_cast<std::size_t>((i + 1) % 3)];
      const IVec3& w = pts[static_cast<std::size_t>((i + 2) % 3)];
      bool on_boundary = false;
      for (std::size_t k = 0; k < 3; ++k) on_boundary = on_boundary || (a[k] == 0 && b[k] == 0);
      if (on_boundary) continue;
      IVec3 mid = add(a, b);
      queue.push_back({mid, {sub(mid, scale(w, 2))}});
    }
  }
  if (static_cast<Int>(cells.size()) != group.order()) {
    throw HilbError("flood fill found " + std::to_string(cells.size()) + " cells, expected " + std::to_string(group.order()));
  }
  std::sort(cells.begin(), cells.end(), [](const HilbCell& a, const HilbCell& b) { return a.vertices < b.vertices; });
  return cells;
}

Triangulation hilb_fan(const HilbContext& ctx, const HilbOptions& options) {
  auto cells = hilb_cells(ctx, options);
  Int d = ctx.overlattice().denominator();
  std::vector<IVec3> verts;
  for (const auto& c : cells) {
    for (const auto& v : c.vertices) verts.push_back(v.scaled_to(d));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Triangle> tris;
  for (const auto& c : cells) {
    Triangle t{};
    for (int i = 0; i < 3; ++i) {
      auto s = c.vertices[static_cast<std::size_t>(i)].scaled_to(d);
      t[static_cast<std::size_t>(i)] = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), s) - verts.begin());
    }
    tris.push_back(t);
  }
  return Triangulation(ctx.overlattice(), std::move(verts), std::move(tris));
}

Triangulation ghilb(const GroupAction& group, const HilbOptions& options) {
  return hilb_fan(HilbContext::standard(group), options);
}

}  // namespace mckay
