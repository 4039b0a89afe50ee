#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/lattice.hpp"

namespace mckay {

class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFloppable : public TriangulationError {
 public:
  using TriangulationError::TriangulationError;
};

using Triangle = std::array<int, 3>;  // sorted vertex indices
using EdgeKey = std::pair<int, int>;  // sorted vertex indices

struct Edge {
  int a = 0;
  int b = 0;
  std::array<int, 2> triangles{-1, -1};  // indices into Triangulation::triangles()
  int triangle_count = 0;

  EdgeKey key() const { return {a, b}; }
  bool interior() const { return triangle_count == 2; }
};

/// A triangulation of the junior simplex with vertices in an overlattice N'.
/// Vertices are stored scaled by the lattice denominator and sorted; the
/// triangles are sorted triples sorted lexicographically.
class Triangulation {
 public:
  Triangulation(Lattice lattice, std::vector<IVec3> scaled_vertices, std::vector<Triangle> triangles);

  const Lattice& lattice() const { return lattice_; }
  Int denominator() const { return lattice_.denominator(); }
  const std::vector<IVec3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  JuniorPoint point(int vertex) const { return RatVec3::make(vertices_[static_cast<std::size_t>(vertex)], denominator()); }
  /// Index of the vertex with these scaled coordinates, or -1.
  int vertex_index(const IVec3& scaled) const;
  int vertex_index(const RatVec3& point) const;
  std::optional<Edge> find_edge(int a, int b) const;
  bool has_edge(int a, int b) const { return find_edge(a, b).has_value(); }
  std::vector<Edge> interior_edges() const;
  /// Lies on the boundary of the junior simplex.
  bool is_boundary_vertex(int vertex) const;
  bool is_corner(int vertex) const;
  std::vector<int> neighbours(int vertex) const;
  /// Vertex opposite the edge in the given adjacent triangle.
  int apex(const Edge& edge, int side) const;

  /// Canonical text key (vertex list and triangle list).
  std::string canonical_key() const;
  std::string vertex_name(int vertex) const;

  /// Throws TriangulationError unless every triangle is unimodular and the
  /// triangles tile the junior simplex.
  void validate() const;

  bool operator==(const Triangulation& other) const {
    return lattice_ == other.lattice_ && vertices_ == other.vertices_ && triangles_ == other.triangles_;
  }

 private:
  void build_edges();

  Lattice lattice_;
  std::vector<IVec3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::map<EdgeKey, std::size_t> edge_index_;
};

/// Junior simplex corners scaled by d: e1, e2, e3.
std::array<IVec3, 3> scaled_corners(Int d);

/// Scaled vertex set a crepant triangulation for the group must use: the
/// corners plus every junior point, in the ambient denominator.
std::vector<IVec3> crepant_vertex_set(const GroupAction& group);

enum class CurveKind { Flop, Rigid, Wide };

/// w1 + w2 = alpha·v1 + beta·v2 for the apexes w of an interior edge {v1,v2}.
struct CurveType {
  CurveKind kind = CurveKind::Flop;
  Int alpha = 1;
  Int beta = 1;

  /// k for Wide(k): the larger coefficient.
  Int wide_degree() const { return std::max(alpha, beta); }
  std::string name() const;
  bool operator==(const CurveType&) const = default;
};

CurveType curve_type(const Triangulation& t, const Edge& edge);
CurveType curve_type(const Triangulation& t, int a, int b);
bool is_floppable(const Triangulation& t, int a, int b);

/// Replaces the edge's two triangles by the two on the other diagonal.
/// Returns the new triangulation and the new diagonal.
std::pair<Triangulation, EdgeKey> flip(const Triangulation& t, int a, int b);

struct FlipGraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKey flipped;   // edge of `from` that was flipped
  EdgeKey created;   // its replacement in `to`
};

struct FlipGraph {
  std::vector<Triangulation> nodes;
  std::vector<FlipGraphEdge> edges;
  bool truncated = false;

  std::optional<std::size_t> find(const Triangulation& t) const;
};

/// Breadth-first closure under flips of (-1,-1) edges.
FlipGraph flip_graph(const Triangulation& start, std::size_t max_nodes);

/// Every unimodular triangulation of the junior simplex on the full crepant
/// vertex set, by exhaustive search. Throws when |G| exceeds the guard.
std::vector<Triangulation> brute_force_triangulations(const GroupAction& group, Int guard = 12);

}  // namespace mckay
