#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mckay/ithilb.hpp"
#include "mckay/reid.hpp"

namespace mckay {

/// Labels of the interior edges of the G-Hilb triangulation that are absent
/// from the target. Throws TriangulationError when the vertex sets differ.
std::set<Character> edge_diff_labels(const Triangulation& ghilb, const ReidLabels& labels, const Triangulation& target);

/// Nontrivial characters trivial on A.
std::vector<Character> lifted_nontrivial(const SubgroupSpec& subgroup);

/// T-Hilb A-Hilb for the single-step chain A ≤ G.
Triangulation target_triangulation(const GroupAction& group, const SubgroupSpec& subgroup);

/// Every nontrivial lifted character labels a G-Hilb edge missing from
/// T-Hilb A-Hilb.
bool corollary_check(const GroupAction& group, const SubgroupSpec& subgroup);

struct FlipStep {
  Triangulation before;
  EdgeKey flipped;
  EdgeKey created;
  Character label;  // propagated label of the flipped curve
};

struct FlipPath {
  std::vector<FlipStep> steps;
  std::set<Character> chi_gamma;
};

struct SearchBounds {
  std::size_t max_depth = 64;
  std::size_t max_nodes = 20000;
};

struct SearchOutcome {
  std::optional<FlipPath> path;
  std::size_t nodes_explored = 0;
  std::size_t depth_reached = 0;
  bool bounds_hit = false;
  bool shortest = false;  // path is a shortest certificate
};

/// Shortest flip sequence from G-Hilb to T-Hilb A-Hilb whose propagated
/// flop labels cover every nontrivial lifted character. Flipped curves pass
/// their label to the new diagonal; other edges keep theirs. A
/// crossing-reducing path of minimal possible length is tried first, then
/// breadth-first search within the bounds. When only the crossing-reducing
/// path covers, it is returned with `shortest` unset.
SearchOutcome search_path(const GroupAction& group, const SubgroupSpec& subgroup, const SearchBounds& bounds = {});

enum class Method { CorollaryFastPath, PathSearch, Failed };

std::string method_name(Method method);

struct ConjectureReport {
  GroupAction group;
  SubgroupSpec subgroup;
  bool verified = false;
  bool target_reached = false;
  Method method = Method::Failed;
  std::vector<Character> lifted;                // nontrivial lifted characters
  std::set<Character> edge_diff;                // labels of G-Hilb edges not in the target
  std::set<Character> chi_gamma;
  std::optional<FlipPath> path;
  SearchOutcome search;
  std::vector<Character> lifted_on_divisors;    // lifted characters in G-Hilb vertex labels
  std::vector<Character> lifted_on_long_sides;  // lifted characters labelling generalised long sides
  std::optional<Rational> lifted_step_fraction; // steps whose label is lifted, over all steps
  std::vector<std::string> notes;
};

/// Corollary fast path first; the path search supplies a certificate when
/// it is found within the bounds and decides the instance otherwise.
ConjectureReport conjecture_report(const GroupAction& group, const SubgroupSpec& subgroup, const SearchBounds& bounds = {});

}  // namespace mckay
