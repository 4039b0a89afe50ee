#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

class NoPairFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximal chain of collinear interior edges.
struct StraightLine {
  std::vector<int> vertices;     // in order along the line
  std::vector<EdgeKey> edges;
};

std::vector<StraightLine> straight_lines(const Triangulation& t);

/// Two coprime monomials of one character with equal weight on both ends of
/// an edge.
struct MonomialPair {
  IVec3 first{0, 0, 0};
  IVec3 second{0, 0, 0};
  Character character;
};

/// Minimal monomial pair of an interior edge. Throws NoPairFound when its
/// degree exceeds twice the group exponent.
MonomialPair edge_pair(const Triangulation& t, const Edge& edge, const GroupAction& group);
Character label_edge(const Triangulation& t, const Edge& edge, const GroupAction& group);

using EdgeLabels = std::map<EdgeKey, Character>;

enum class VertexRule {
  Lines,      // two label chains pass through the vertex
  Champions,  // valency three, one chain on all edges
  DelPezzo,   // three chains pass through the vertex
};

struct VertexLabel {
  std::vector<Character> characters;  // sorted, one or two
  VertexRule rule = VertexRule::Lines;
};

/// Label of an interior vertex of a G-Hilb triangulation. Throws ReidError
/// when the local configuration is not one of the recognised ones.
VertexLabel label_vertex(const Triangulation& t, int vertex, const EdgeLabels& edge_labels, const GroupAction& group);

struct ReidLabels {
  EdgeLabels edge_labels;
  std::map<EdgeKey, MonomialPair> edge_pairs;
  std::map<int, VertexLabel> vertex_labels;

  /// Interior edges carrying the character, sorted.
  std::vector<EdgeKey> edges_marked(Character chi) const;
  /// Interior vertices whose label contains the character.
  std::vector<int> vertices_marked(Character chi) const;
};

/// Labels of every interior edge and interior vertex of a G-Hilb triangulation.
ReidLabels reid_labels(const Triangulation& t, const GroupAction& group);

struct ReidRecipe {
  Triangulation triangulation;
  ReidLabels labels;
};

ReidRecipe reid_recipe(const GroupAction& group);

}  // namespace mckay
