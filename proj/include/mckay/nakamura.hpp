#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/lattice.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

class TieError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInterior : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HilbError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monomial basis of a torus-fixed cluster: one exponent per character.
struct GGraph {
  std::vector<IVec3> by_character;

  const IVec3& operator[](Character chi) const { return by_character.at(static_cast<std::size_t>(chi.index)); }
  std::size_t size() const { return by_character.size(); }
  bool operator==(const GGraph&) const = default;
  auto operator<=>(const GGraph&) const = default;
};

/// Checks the G-graph invariants (contains 1, one monomial per character,
/// division closed, exponents inside the box).
bool is_valid_ggraph(const GGraph& graph, const GroupAction& group);

struct Cone3 {
  std::vector<RatVec3> rays;  // primitive in the ambient lattice, cyclic order
};

/// A unimodular cone (chart) of a sublattice together with a finer
/// overlattice; the quotient acts diagonally on the chart coordinates.
class HilbContext {
 public:
  /// Positive orthant, N = Z^3 inside N'(G).
  static HilbContext standard(const GroupAction& group);
  /// Chart cone spanned by `rays` (a basis of the sublattice they span)
  /// inside `overlattice`.
  static HilbContext chart(const std::array<RatVec3, 3>& rays, const Lattice& overlattice);

  const GroupAction& action() const { return action_; }
  const std::array<RatVec3, 3>& rays() const { return rays_; }
  const Lattice& overlattice() const { return overlattice_; }
  /// Ambient point of a chart point given in chart coordinates.
  RatVec3 to_ambient(const RatVec3& chart_point) const;

 private:
  HilbContext(GroupAction action, std::array<RatVec3, 3> rays, Lattice overlattice)
      : action_(std::move(action)), rays_(rays), overlattice_(std::move(overlattice)) {}

  GroupAction action_;
  std::array<RatVec3, 3> rays_;
  Lattice overlattice_;
};

/// Exponent vectors of the monomial box grouped by character.
class MonomialBox {
 public:
  explicit MonomialBox(const GroupAction& group);

  const GroupAction& group() const { return *group_; }
  const IVec3& extent() const { return extent_; }
  /// Monomials of the character not divisible by a non-trivial invariant
  /// monomial of the box; the only possible minimisers and sufficient as
  /// competitors.
  const std::vector<IVec3>& candidates(Character chi) const { return buckets_[static_cast<std::size_t>(chi.index)]; }

 private:
  const GroupAction* group_;
  IVec3 extent_{1, 1, 1};
  std::vector<std::vector<IVec3>> buckets_;
};

/// G-graph of v-minimal monomials at an interior point v (chart
/// coordinates). Throws TieError when v is not generic.
GGraph minimal_ggraph_at(const IVec3& v, const HilbContext& ctx);

/// Same, breaking ties by the symbolic perturbation v + δ·d1 + δ²·d2 + ...
/// followed by the coordinate directions; always succeeds.
GGraph minimal_ggraph_perturbed(const IVec3& v, const std::vector<IVec3>& directions, const MonomialBox& box);

/// Closed cone (chart coordinates, ambient rays) on which every monomial of
/// the graph is weakly minimal. Throws EmptyInterior when lower dimensional.
Cone3 ggraph_cone(const GGraph& graph, const HilbContext& ctx);

struct HilbOptions {
  /// Seed point of the flood fill is the barycentre plus (1,2,3)/seed_denominator
  /// (chart coordinates); 0 selects the plain barycentre.
  Int seed_denominator = 0;
};

struct HilbCell {
  GGraph graph;
  std::array<RatVec3, 3> vertices;  // ambient junior points
};

/// Cells of the Hilbert scheme fan of the chart, with their G-graphs.
std::vector<HilbCell> hilb_cells(const HilbContext& ctx, const HilbOptions& options = {});

/// The Hilbert scheme triangulation of the chart as a triangulation in the
/// overlattice. For HilbContext::standard this is G-Hilb.
Triangulation hilb_fan(const HilbContext& ctx, const HilbOptions& options = {});

/// G-Hilb of C^3 for the group.
Triangulation ghilb(const GroupAction& group, const HilbOptions& options = {});

}  // namespace mckay
