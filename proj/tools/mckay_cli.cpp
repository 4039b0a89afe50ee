#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mckay/conjecture.hpp"
#include "mckay/io.hpp"
#include "mckay/ithilb.hpp"
#include "mckay/nakamura.hpp"
#include "mckay/walls.hpp"

using namespace mckay;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string json_path = "-";
  std::string svg_path;
  std::string input;
  Int subgroup_order = 0;
  std::vector<Int> subgroup_gens;
  std::string chain;
  std::size_t max_depth = SearchBounds{}.max_depth;
  std::size_t max_nodes = SearchBounds{}.max_nodes;
  bool labels = false;
  Int seed_denominator = 0;
  Int guard = 12;
  std::vector<std::string> flips;
  std::string epsilon;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const Options& o, const Json& doc) {
  write_text(o.json_path, doc.dump(2) + "\n");
  if (!o.svg_path.empty()) write_text(o.svg_path, render_svg(doc));
}

GroupAction parse_group(const std::string& text) {
  try {
    return GroupAction::parse(text);
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
}

SubgroupSpec parse_subgroup(const GroupAction& g, const Options& o) {
  if (o.subgroup_order > 0 && !o.subgroup_gens.empty()) throw UsageError("give either --subgroup-order or --subgroup-gens");
  try {
    if (o.subgroup_order > 0) return subgroup_of_order(g, o.subgroup_order);
    if (!o.subgroup_gens.empty()) return make_subgroup(g, o.subgroup_gens);
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("a subgroup is required (--subgroup-order or --subgroup-gens)");
}

// "2;6" lists subgroup orders; "gens:1,3;gens:1" lists generator indices.
std::vector<SubgroupSpec> parse_chain(const GroupAction& g, const std::string& text) {
  std::vector<SubgroupSpec> out;
  std::stringstream ss(text);
  std::string entry;
  try {
    while (std::getline(ss, entry, ';')) {
      if (entry.rfind("gens:", 0) == 0) {
        std::vector<Int> idx;
        std::stringstream gs(entry.substr(5));
        std::string tok;
        while (std::getline(gs, tok, ',')) idx.push_back(std::stoll(tok));
        out.push_back(make_subgroup(g, idx));
      } else {
        out.push_back(subgroup_of_order(g, std::stoll(entry)));
      }
    }
  } catch (const std::logic_error& e) {
    throw UsageError("bad --chain entry '" + entry + "': " + e.what());
  }
  if (out.empty()) throw UsageError("empty --chain");
  return out;
}

EdgeKey parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--flip expects 'i,j'");
  try {
    int a = std::stoi(text.substr(0, comma));
    int b = std::stoi(text.substr(comma + 1));
    return {std::min(a, b), std::max(a, b)};
  } catch (const std::logic_error&) {
    throw UsageError("--flip expects 'i,j'");
  }
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + text + "'");
  }
}

int cmd_group(const Options& o) {
  emit(o, to_json(parse_group(o.group)));
  return 0;
}

Json triangulation_doc(const GroupAction& g, const Triangulation& t, bool labels) {
  Json doc = to_json(t);
  doc["group"] = g.notation();
  if (labels) add_labels(doc, g, reid_labels(t, g));
  return doc;
}

int cmd_ghilb(const Options& o) {
  auto g = parse_group(o.group);
  auto t = ghilb(g, {o.seed_denominator});
  emit(o, triangulation_doc(g, t, o.labels));
  return 0;
}

int cmd_reid(const Options& o) {
  auto g = parse_group(o.group);
  emit(o, triangulation_doc(g, ghilb(g, {o.seed_denominator}), true));
  return 0;
}

int cmd_flops(const Options& o) {
  auto g = parse_group(o.group);
  Triangulation t = ghilb(g, {o.seed_denominator});
  EdgeLabels labels = reid_labels(t, g).edge_labels;
  Json flipped = Json::array();
  for (const auto& text : o.flips) {
    auto e = parse_edge(text);
    if (!t.has_edge(e.first, e.second)) throw UsageError("no edge " + text);
    auto [next, created] = flip(t, e.first, e.second);
    Character label = labels.at(e);
    labels.erase(e);
    labels[created] = label;
    flipped.push_back({{"flipped", Json::array({e.first, e.second})}, {"created", Json::array({created.first, created.second})}, {"label", g.character_name(label)}});
    t = std::move(next);
  }
  Json doc = to_json(t);
  doc["group"] = g.notation();
  doc["flips"] = flipped;
  doc["curve_types"] = curve_types_json(t);
  Json edge_labels = Json::array();
  for (const auto& [e, chi] : labels) edge_labels.push_back({{"edge", Json::array({e.first, e.second})}, {"label", g.character_name(chi)}});
  doc["edge_labels"] = edge_labels;
  auto graph = flip_graph(ghilb(g, {o.seed_denominator}), o.max_nodes);
  doc["flip_graph"] = {{"nodes", graph.nodes.size()}, {"edges", graph.edges.size()}, {"truncated", graph.truncated}};
  emit(o, doc);
  return 0;
}

int cmd_ithilb(const Options& o) {
  auto g = parse_group(o.group);
  std::vector<SubgroupSpec> chain = o.chain.empty() ? std::vector<SubgroupSpec>{parse_subgroup(g, o)} : parse_chain(g, o.chain);
  Triangulation t = [&] {
    try {
      return iterated_hilb(make_chain(g, chain));
    } catch (const ChainError& e) {
      throw UsageError(e.what());
    }
  }();
  Json doc = triangulation_doc(g, t, false);
  Json subs = Json::array();
  for (const auto& a : chain) subs.push_back(to_json(g, a));
  doc["chain"] = subs;
  doc["equals_ghilb"] = t == ghilb(g);
  if (chain.size() == 1) {
    ThetaBuildParams params;
    if (!o.epsilon.empty()) params.epsilon = parse_rational(o.epsilon);
    StabilityCondition theta;
    try {
      theta = build_theta(g, chain[0], params);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Json values = Json::array();
    for (const auto& v : theta.values) values.push_back(v.denominator() == 1 ? Json(v.numerator()) : Json(std::to_string(v.numerator()) + "/" + std::to_string(v.denominator())));
    auto sign = check_lemma_sign(g, chain[0], theta);
    doc["theta"] = {{"values", values}, {"sign_check", sign ? Json(*sign) : Json(nullptr)}, {"epsilon_certified", epsilon_certified(g, chain[0], params)}};
  }
  emit(o, doc);
  return 0;
}

int cmd_walls(const Options& o) {
  auto g = parse_group(o.group);
  emit(o, to_json(wall_census(g), g));
  return 0;
}

int cmd_conjecture(const Options& o) {
  auto g = parse_group(o.group);
  auto a = parse_subgroup(g, o);
  auto report = conjecture_report(g, a, {o.max_depth, o.max_nodes});
  emit(o, to_json(report));
  return report.verified ? 0 : kExitInconclusive;
}

int cmd_enumerate(const Options& o) {
  auto g = parse_group(o.group);
  auto all = brute_force_triangulations(g, o.guard);
  auto start = ghilb(g);
  auto graph = flip_graph(start, o.max_nodes);
  Json list = Json::array();
  for (const auto& t : all) list.push_back(to_json(t));
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["group"] = g.notation();
  doc["count"] = all.size();
  doc["flip_graph_nodes"] = graph.nodes.size();
  doc["flip_graph_truncated"] = graph.truncated;
  doc["ghilb_index"] = Json(nullptr);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == start) doc["ghilb_index"] = i;
  }
  doc["triangulations"] = list;
  write_text(o.json_path, doc.dump(2) + "\n");
  return 0;
}

int cmd_svg(const Options& o) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.input);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  write_text(o.svg_path.empty() ? "-" : o.svg_path, render_svg(doc));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crepant resolutions of C^3/G for finite abelian G in SL3"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub, bool svg) {
    sub->add_option("--json", o.json_path, "JSON output path, '-' for stdout");
    if (svg) sub->add_option("--svg", o.svg_path, "SVG output path");
  };
  auto add_group = [&](CLI::App* sub) { sub->add_option("group", o.group, "r:a,b,c or r1:a1,b1,c1*r2:a2,b2,c2")->required(); };
  auto add_subgroup = [&](CLI::App* sub) {
    sub->add_option("--subgroup-order", o.subgroup_order, "order of a subgroup of a cyclic group");
    sub->add_option("--subgroup-gens", o.subgroup_gens, "indices of generating elements")->delimiter(',');
  };

  auto* group = app.add_subcommand("group", "group elements, characters, quiver and subgroups");
  add_group(group);
  add_output(group, false);

  auto* gh = app.add_subcommand("ghilb", "G-Hilb triangulation");
  add_group(gh);
  add_output(gh, true);
  gh->add_flag("--labels", o.labels, "include Reid's recipe labels");
  gh->add_option("--seed-denominator", o.seed_denominator, "offset the flood fill seed by (1,2,3)/N");

  auto* reid = app.add_subcommand("reid", "Reid's recipe on G-Hilb");
  add_group(reid);
  add_output(reid, true);
  reid->add_option("--seed-denominator", o.seed_denominator, "offset the flood fill seed by (1,2,3)/N");

  auto* flops = app.add_subcommand("flops", "curve types, flips and flip graph size");
  add_group(flops);
  add_output(flops, true);
  flops->add_option("--flip", o.flips, "flip the edge 'i,j' (repeatable, applied in order)");
  flops->add_option("--max-nodes", o.max_nodes, "flip graph node bound");
  flops->add_option("--seed-denominator", o.seed_denominator, "offset the flood fill seed by (1,2,3)/N");

  auto* ith = app.add_subcommand("ithilb", "iterated Hilbert scheme and its stability condition");
  add_group(ith);
  add_output(ith, true);
  add_subgroup(ith);
  ith->add_option("--chain", o.chain, "subgroup chain, e.g. '2;6' or 'gens:1;gens:1,2'");
  ith->add_option("--epsilon", o.epsilon, "epsilon for the stability condition, e.g. 1/10");

  auto* walls = app.add_subcommand("walls", "wall census of the G-Hilb chamber");
  add_group(walls);
  add_output(walls, true);

  auto* conj = app.add_subcommand("conjecture", "search for a labelled flip path to T-Hilb A-Hilb");
  add_group(conj);
  add_output(conj, false);
  add_subgroup(conj);
  conj->add_option("--max-depth", o.max_depth, "search depth bound");
  conj->add_option("--max-nodes", o.max_nodes, "search node bound per phase");

  auto* en = app.add_subcommand("enumerate", "all unimodular triangulations by exhaustive search");
  add_group(en);
  add_output(en, false);
  en->add_option("--guard", o.guard, "largest group order accepted");
  en->add_option("--max-nodes", o.max_nodes, "flip graph node bound");

  auto* svg = app.add_subcommand("svg", "render a saved triangulation document");
  svg->add_option("input", o.input, "JSON document")->required();
  svg->add_option("--svg", o.svg_path, "SVG output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*group) return cmd_group(o);
    if (*gh) return cmd_ghilb(o);
    if (*reid) return cmd_reid(o);
    if (*flops) return cmd_flops(o);
    if (*ith) return cmd_ithilb(o);
    if (*walls) return cmd_walls(o);
    if (*conj) return cmd_conjecture(o);
    if (*en) return cmd_enumerate(o);
    if (*svg) return cmd_svg(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
