#include "mckay/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace mckay {

namespace {

Json vec(const IVec3& v) { return Json::array({v[0], v[1], v[2]}); }

Json edge_json(const EdgeKey& e) { return Json::array({e.first, e.second}); }

Json rational(const Rational& r) {
  if (r.denominator() == 1) return Json(r.numerator());
  return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

std::string rule_name(VertexRule rule) {
  switch (rule) {
    case VertexRule::Lines: return "lines";
    case VertexRule::Champions: return "champions";
    case VertexRule::DelPezzo: return "del_pezzo";
  }
  return "?";
}

Json characters(const GroupAction& g, const std::vector<Character>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(g.character_name(c));
  return out;
}

template <class C>
Json character_names(const GroupAction& g, const C& cs) {
  return characters(g, std::vector<Character>(cs.begin(), cs.end()));
}

}  // namespace

Json to_json(const Triangulation& t) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["denominator"] = t.denominator();
  Json basis = Json::array();
  for (const auto& row : t.lattice().basis()) basis.push_back(vec(row));
  doc["lattice"] = basis;
  Json verts = Json::array();
  for (const auto& v : t.vertices()) verts.push_back(vec(v));
  doc["vertices"] = verts;
  Json tris = Json::array();
  for (const auto& tri : t.triangles()) tris.push_back(Json::array({tri[0], tri[1], tri[2]}));
  doc["triangles"] = tris;
  return doc;
}

Triangulation triangulation_from_json(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw SchemaError("unsupported schema_version " + j.at("schema_version").dump());
    }
    Int d = j.at("denominator").get<Int>();
    if (d <= 0) throw SchemaError("denominator must be positive");
    std::vector<IVec3> verts;
    for (const auto& v : j.at("vertices")) verts.push_back({v.at(0).get<Int>(), v.at(1).get<Int>(), v.at(2).get<Int>()});
    std::vector<IVec3> gens = verts;
    if (j.contains("lattice")) {
      gens.clear();
      for (const auto& v : j.at("lattice")) gens.push_back({v.at(0).get<Int>(), v.at(1).get<Int>(), v.at(2).get<Int>()});
    }
    std::vector<Triangle> tris;
    for (const auto& t : j.at("triangles")) {
      Triangle tri{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()};
      for (int v : tri) {
        if (v < 0 || v >= static_cast<int>(verts.size())) throw SchemaError("triangle refers to missing vertex " + std::to_string(v));
      }
      tris.push_back(tri);
    }
    return Triangulation(Lattice::overlattice(d, gens), std::move(verts), std::move(tris));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed triangulation document: ") + e.what());
  }
}

Json to_json(const GroupAction& g) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["group"] = g.notation();
  doc["order"] = g.order();
  doc["denominator"] = g.denominator();
  doc["cyclic"] = g.is_cyclic();
  Json gens = Json::array();
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    gens.push_back({{"weights", vec(g.generators()[i])}, {"order", g.generator_orders()[i]}});
  }
  doc["generators"] = gens;
  Json elems = Json::array();
  for (const auto& e : g.elements()) elems.push_back(vec(e));
  doc["elements"] = elems;
  Json junior = Json::array();
  for (const auto& p : junior_elements(g)) junior.push_back(vec(p.scaled_to(g.denominator())));
  doc["junior_points"] = junior;
  Json chars = Json::array();
  for (const auto& c : g.characters()) {
    chars.push_back({{"index", c.index}, {"name", g.character_name(c)}, {"monomial", vec(g.representative_monomial(c))}});
  }
  doc["characters"] = chars;
  auto quiver = mckay_quiver(g);
  Json arrows = Json::array();
  for (const auto& a : quiver.arrows) {
    arrows.push_back({{"tail", g.character_name(a.tail)}, {"head", g.character_name(a.head)}, {"coordinate", std::string(1, "xyz"[a.coordinate])}});
  }
  doc["mckay_quiver"] = arrows;
  Json subs = Json::array();
  for (const auto& a : all_subgroups(g)) subs.push_back(to_json(g, a));
  doc["subgroups"] = subs;
  return doc;
}

Json to_json(const GroupAction& g, const SubgroupSpec& a) {
  Json out;
  out["order"] = a.order();
  out["generator_indices"] = a.generator_indices;
  Json elems = Json::array();
  for (const auto& e : a.elements) elems.push_back(vec(e));
  out["elements"] = elems;
  out["lifted"] = characters(g, a.lifted);
  return out;
}

void add_labels(Json& doc, const GroupAction& g, const ReidLabels& labels) {
  Json edges = Json::array();
  for (const auto& [e, chi] : labels.edge_labels) {
    const auto& pair = labels.edge_pairs.at(e);
    edges.push_back({{"edge", edge_json(e)}, {"label", g.character_name(chi)}, {"monomials", Json::array({vec(pair.first), vec(pair.second)})}});
  }
  doc["edge_labels"] = edges;
  Json verts = Json::array();
  for (const auto& [v, vl] : labels.vertex_labels) {
    verts.push_back({{"vertex", v}, {"labels", characters(g, vl.characters)}, {"rule", rule_name(vl.rule)}});
  }
  doc["vertex_labels"] = verts;
}

Json curve_types_json(const Triangulation& t) {
  Json out = Json::array();
  for (const auto& e : t.interior_edges()) {
    auto ct = curve_type(t, e);
    out.push_back({{"edge", edge_json(e.key())}, {"type", ct.name()}, {"floppable", ct.kind == CurveKind::Flop}});
  }
  return out;
}

Json to_json(const WallCensus& census, const GroupAction& g) {
  Json doc = to_json(census.triangulation);
  doc["group"] = g.notation();
  add_labels(doc, g, census.labels);
  Json dashed = Json::array();
  Json bold = Json::array();
  Json sides = Json::array();
  for (const auto& ls : census.long_sides) {
    Json segs = Json::array();
    for (const auto& s : ls.segments) segs.push_back(s);
    Json finals = Json::array();
    for (const auto& e : ls.final_edges) {
      finals.push_back(edge_json(e));
      bold.push_back(edge_json(e));
    }
    for (const auto& e : ls.edges) dashed.push_back(edge_json(e));
    sides.push_back({{"label", g.character_name(ls.label)}, {"path", ls.path}, {"segments", segs}, {"final_edges", finals}});
  }
  doc["long_sides"] = sides;
  doc["dashed"] = dashed;
  doc["bold"] = bold;
  Json walls = Json::array();
  for (const auto& w : census.walls) {
    Json jw;
    jw["type"] = wall_type_name(w.type);
    if (w.vertex) {
      jw["vertex"] = *w.vertex;
      jw["reducibility"] = "unknown";
    }
    if (w.edge) jw["edge"] = edge_json(*w.edge);
    if (w.long_side) jw["long_side"] = *w.long_side;
    jw["labels"] = characters(g, w.labels);
    if (w.also_final_of) jw["also_final_of"] = *w.also_final_of;
    walls.push_back(jw);
  }
  doc["walls"] = walls;
  doc["counts"] = {{"divisor", census.count(WallType::Divisor)},
                   {"flop_curve", census.count(WallType::FlopCurve)},
                   {"long_side", census.count(WallType::LongSide)},
                   {"final_edges", bold.size()}};
  return doc;
}

Json to_json(const ConjectureReport& r) {
  const auto& g = r.group;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["group"] = g.notation();
  doc["subgroup"] = to_json(g, r.subgroup);
  doc["verified"] = r.verified;
  doc["method"] = method_name(r.method);
  doc["target_reached"] = r.target_reached;
  doc["lifted"] = characters(g, r.lifted);
  doc["edge_diff_labels"] = character_names(g, r.edge_diff);
  doc["chi_gamma"] = character_names(g, r.chi_gamma);
  if (r.path) {
    Json steps = Json::array();
    for (const auto& s : r.path->steps) {
      steps.push_back({{"flipped", edge_json(s.flipped)},
                       {"flipped_points", Json::array({vec(s.before.vertices()[static_cast<std::size_t>(s.flipped.first)]),
                                                       vec(s.before.vertices()[static_cast<std::size_t>(s.flipped.second)])})},
                       {"created", edge_json(s.created)},
                       {"label", g.character_name(s.label)}});
    }
    doc["path"] = {{"length", r.path->steps.size()}, {"shortest", r.search.shortest}, {"steps", steps}};
  } else {
    doc["path"] = nullptr;
  }
  doc["search"] = {{"nodes_explored", r.search.nodes_explored}, {"depth_reached", r.search.depth_reached}, {"bounds_hit", r.search.bounds_hit}};
  doc["diagnostics"] = {{"lifted_on_divisors", characters(g, r.lifted_on_divisors)},
                        {"lifted_on_long_sides", characters(g, r.lifted_on_long_sides)},
                        {"lifted_step_fraction", r.lifted_step_fraction ? rational(*r.lifted_step_fraction) : Json(nullptr)}};
  doc["notes"] = r.notes;
  return doc;
}

std::string render_svg(const Json& doc) {
  Triangulation t = triangulation_from_json(doc);
  const double side = 600.0;
  const double margin = 40.0;
  const double height = side * std::sqrt(3.0) / 2.0;
  const double corners[3][2] = {{margin, margin + height}, {margin + side, margin + height}, {margin + side / 2.0, margin}};
  auto d = static_cast<double>(t.denominator());
  auto pos = [&](int v) {
    const auto& p = t.vertices()[static_cast<std::size_t>(v)];
    double x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += static_cast<double>(p[static_cast<std::size_t>(i)]) / d * corners[i][0];
      y += static_cast<double>(p[static_cast<std::size_t>(i)]) / d * corners[i][1];
    }
    return std::pair<double, double>{x, y};
  };
  auto num = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return std::string(buf);
  };
  auto edge_set = [&](const char* key) {
    std::set<EdgeKey> out;
    if (doc.contains(key)) {
      for (const auto& e : doc.at(key)) out.insert({std::min(e.at(0).get<int>(), e.at(1).get<int>()), std::max(e.at(0).get<int>(), e.at(1).get<int>())});
    }
    return out;
  };
  auto dashed = edge_set("dashed");
  auto bold = edge_set("bold");

  std::ostringstream os;
  double w = side + 2 * margin;
  double h = height + 2 * margin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w) << ' '
     << num(h) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g stroke=\"black\" stroke-linecap=\"round\">\n";
  for (const auto& e : t.edges()) {
    auto [x1, y1] = pos(e.a);
    auto [x2, y2] = pos(e.b);
    os << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2) << "\"";
    os << " stroke-width=\"" << (bold.count(e.key()) ? "4" : "1.5") << "\"";
    if (dashed.count(e.key())) os << " stroke-dasharray=\"9,6\"";
    os << "/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (int v = 0; v < static_cast<int>(t.vertices().size()); ++v) {
    auto [x, y] = pos(v);
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n<g font-family=\"serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  if (doc.contains("edge_labels")) {
    for (const auto& l : doc.at("edge_labels")) {
      auto [x1, y1] = pos(l.at("edge").at(0).get<int>());
      auto [x2, y2] = pos(l.at("edge").at(1).get<int>());
      os << "<text x=\"" << num((x1 + x2) / 2) << "\" y=\"" << num((y1 + y2) / 2) << "\" stroke=\"white\" stroke-width=\"4\" paint-order=\"stroke\">"
         << l.at("label").get<std::string>() << "</text>\n";
    }
  }
  if (doc.contains("vertex_labels")) {
    for (const auto& l : doc.at("vertex_labels")) {
      auto [x, y] = pos(l.at("vertex").get<int>());
      std::string text;
      for (const auto& c : l.at("labels")) text += (text.empty() ? "" : ",") + c.get<std::string>();
      double bw = 10.0 + 8.0 * static_cast<double>(text.size());
      os << "<rect x=\"" << num(x - bw / 2) << "\" y=\"" << num(y - 11) << "\" width=\"" << num(bw) << "\" height=\"22\" fill=\"white\" stroke=\"black\"/>\n";
      os << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\">" << text << "</text>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace mckay
