#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <string>
#include <vector>

#include "mckay/lattice.hpp"

namespace mckay {

using Rational = boost::rational<Int>;

/// Character of an abelian group, indexed in mixed radix over the group's
/// canonical generators. For a cyclic group 1/r(a,b,c) the index k is the
/// character g ↦ ε^k of the given generator g.
struct Character {
  Int index = 0;
  auto operator<=>(const Character&) const = default;
};

struct CyclicFactor {
  Int order = 1;
  IVec3 weights{0, 0, 0};
};

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite abelian subgroup of diagonal SL3 matrices. Internally the group
/// is the subgroup of (Z/D)^3 spanned by its generators, D the exponent;
/// an element with scaled weights w acts on (x,y,z) by exp(2πi w/D).
class GroupAction {
 public:
  /// Product of cyclic factors. Each factor must satisfy a+b+c ≡ 0 mod r.
  /// A single faithful factor keeps its generator; anything else is put
  /// into invariant-factor form.
  static GroupAction from_factors(const std::vector<CyclicFactor>& factors);
  /// Group generated by scaled weight vectors (mod denominator).
  static GroupAction from_generators(Int denominator, const std::vector<IVec3>& scaled_generators);
  static GroupAction cyclic(Int r, Int a, Int b, Int c);
  static GroupAction trivial();
  /// "r:a,b,c" or "r1:a1,b1,c1*r2:a2,b2,c2".
  static GroupAction parse(const std::string& notation);

  Int order() const { return static_cast<Int>(elements_.size()); }
  Int denominator() const { return denominator_; }
  bool is_trivial() const { return order() == 1; }
  bool is_cyclic() const { return generators_.size() <= 1; }

  /// Canonical generators (scaled by denominator()) and their orders.
  const std::vector<IVec3>& generators() const { return generators_; }
  const std::vector<Int>& generator_orders() const { return generator_orders_; }

  /// Elements indexed in mixed radix over the generators.
  const std::vector<IVec3>& elements() const { return elements_; }
  const IVec3& element(Int index) const;
  /// Index of a scaled element, or -1 when it is not in the group.
  Int element_index(const IVec3& scaled) const;
  bool contains(const IVec3& scaled) const { return element_index(scaled) >= 0; }

  /// Character of the monomial x^m (m may have negative entries).
  Character character_of(const IVec3& exponent) const;
  Character coordinate_character(int coordinate) const;
  /// Order of the character of the given coordinate function.
  Int coordinate_order(int coordinate) const;
  Character multiply(Character a, Character b) const;
  Character inverse(Character a) const;
  Character trivial_character() const { return {0}; }
  std::vector<Character> characters() const;
  /// Some monomial exponent carrying the character.
  const IVec3& representative_monomial(Character chi) const;
  /// "5" for cyclic groups, "(1,2)" otherwise.
  std::string character_name(Character chi) const;

  /// N' = Z^3 + Σ Z·g over the group elements.
  Lattice lattice() const;
  /// Canonical notation: "r:a,b,c" or "d1:..*d2:..".
  std::string notation() const;

  /// Groups are equal when they have the same set of diagonal matrices.
  bool operator==(const GroupAction& other) const;

 private:
  GroupAction() = default;
  void build();

  Int denominator_ = 1;
  std::vector<IVec3> generators_;
  std::vector<Int> generator_orders_;
  std::vector<IVec3> elements_;
  std::vector<IVec3> sorted_elements_;
  std::vector<IVec3> representatives_;
};

/// Junior (age one) group elements as points of the junior simplex, sorted
/// by scaled coordinates. Corners are excluded.
std::vector<JuniorPoint> junior_elements(const GroupAction& group);

/// A subgroup A of G together with the data relating it to G.
struct SubgroupSpec {
  std::vector<Int> generator_indices;  // indices of G-elements
  std::vector<IVec3> elements;         // scaled by G.denominator(), sorted
  GroupAction action = GroupAction::trivial();  // A acting on C^3 on its own
  std::vector<Character> restriction;  // G-character index -> A-character
  std::vector<Character> lifted;       // characters trivial on A, sorted

  Int order() const { return static_cast<Int>(elements.size()); }
  bool operator==(const SubgroupSpec& other) const { return elements == other.elements; }
};

/// Subgroup generated by the G-elements with the given indices.
SubgroupSpec make_subgroup(const GroupAction& group, const std::vector<Int>& generator_indices);
/// The unique subgroup of the given order of a cyclic group.
SubgroupSpec subgroup_of_order(const GroupAction& group, Int order);
/// Every subgroup, trivial and full included, sorted by order then elements.
std::vector<SubgroupSpec> all_subgroups(const GroupAction& group);

std::vector<Character> lifted_characters(const GroupAction& group, const SubgroupSpec& subgroup);
GroupAction subgroup_action(const GroupAction& group, const SubgroupSpec& subgroup);
bool is_subgroup_of(const SubgroupSpec& inner, const SubgroupSpec& outer);

struct Arrow {
  Character tail;
  Character head;
  int coordinate = 0;  // 0, 1, 2 for x, y, z
};

struct McKayQuiver {
  std::vector<Character> vertices;
  std::vector<Arrow> arrows;
  std::vector<Int> dimension_vector;
};

McKayQuiver mckay_quiver(const GroupAction& group);

/// Rational function on Irr(G), indexed by character index.
struct StabilityCondition {
  std::vector<Rational> values;

  Rational operator()(Character chi) const { return values.at(static_cast<std::size_t>(chi.index)); }
  Rational total() const;
  bool is_balanced() const { return total() == Rational(0); }
};

/// θ(ρ) = 1 on non-trivial characters and θ(ρ0) = 1 - |H|.
StabilityCondition zero_generated_theta(const GroupAction& group);

}  // namespace mckay
