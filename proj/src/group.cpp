#include "mckay/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace mckay {

namespace {

IVec3 reduce_mod(const IVec3& v, Int d) { return {floor_mod(v[0], d), floor_mod(v[1], d), floor_mod(v[2], d)}; }

Int parse_int(const std::string& text, const std::string& context) {
  std::size_t pos = 0;
  Int value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw GroupError("bad integer '" + text + "' in group notation '" + context + "'");
  }
  if (pos != text.size()) throw GroupError("bad integer '" + text + "' in group notation '" + context + "'");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

GroupAction GroupAction::trivial() {
  GroupAction g;
  g.denominator_ = 1;
  g.build();
  return g;
}

GroupAction GroupAction::cyclic(Int r, Int a, Int b, Int c) { return from_factors({CyclicFactor{r, {a, b, c}}}); }

GroupAction GroupAction::from_factors(const std::vector<CyclicFactor>& factors) {
  Int d = 1;
  for (const auto& f : factors) {
    if (f.order <= 0) throw GroupError("cyclic factor order must be positive");
    if (floor_mod(sum(f.weights), f.order) != 0) {
      throw GroupError("weights " + to_string(f.weights) + " do not sum to 0 mod " + std::to_string(f.order) +
                       " (not in SL3)");
    }
    d = lcm(d, f.order);
  }
  std::vector<IVec3> gens;
  for (const auto& f : factors) gens.push_back(scale(f.weights, d / f.order));
  return from_generators(d, gens);
}

GroupAction GroupAction::from_generators(Int denominator, const std::vector<IVec3>& scaled_generators) {
  if (denominator <= 0) throw GroupError("denominator must be positive");
  std::vector<IVec3> gens;
  for (const auto& g : scaled_generators) {
    IVec3 r = reduce_mod(g, denominator);
    if (r != IVec3{0, 0, 0}) gens.push_back(r);
  }
  for (const auto& g : gens) {
    if (floor_mod(sum(g), denominator) != 0) throw GroupError("generator " + to_string(g) + " is not in SL3");
  }
  GroupAction out;
  if (gens.empty()) {
    out.denominator_ = 1;
    out.build();
    return out;
  }
  if (gens.size() == 1) {
    // Keep the given generator; only shrink the denominator to its order.
    Int order = denominator / gcd(content(gens[0]), denominator);
    Int shrink = denominator / order;
    out.denominator_ = order;
    out.generators_ = {IVec3{gens[0][0] / shrink, gens[0][1] / shrink, gens[0][2] / shrink}};
    out.generator_orders_ = {order};
    out.build();
    return out;
  }
  // Invariant factor form: G ≅ L / Z^3 with L the lattice the generators span.
  Lattice lat = Lattice::overlattice(denominator, gens);
  Int d = lat.denominator();
  const IMat3& b = lat.basis();
  // Relation rows R with R·B = d·I.
  IMat3 rel{};
  Int det = mat_det(b);
  for (int j = 0; j < 3; ++j) {
    // Solve x·B = d·e_j by Cramer's rule.
    for (int i = 0; i < 3; ++i) {
      IMat3 m = b;
      m[i] = IVec3{0, 0, 0};
      m[i][j] = d;
      Int num = mat_det(m);
      if (num % det != 0) throw GroupError("internal: non-integral relation matrix");
      rel[j][i] = num / det;
    }
  }
  SmithForm snf = smith_normal_form(rel);
  IMat3 v_inv = unimodular_inverse(snf.v);
  IMat3 gen_rows = mat_mul(v_inv, b);
  Int exponent = 1;
  for (int i = 0; i < 3; ++i) exponent = lcm(exponent, snf.s[i][i]);
  for (int i = 0; i < 3; ++i) {
    Int s = snf.s[i][i];
    if (s <= 1) continue;
    IVec3 g = reduce_mod(gen_rows[i], d);
    // rescale from denominator d to the exponent
    if (d % exponent != 0) throw GroupError("internal: exponent does not divide denominator");
    IVec3 rescaled = {g[0] / (d / exponent), g[1] / (d / exponent), g[2] / (d / exponent)};
    out.generators_.push_back(rescaled);
    out.generator_orders_.push_back(s);
  }
  out.denominator_ = exponent;
  out.build();
  return out;
}

GroupAction GroupAction::parse(const std::string& notation) {
  if (notation.empty()) throw GroupError("empty group notation");
  std::vector<CyclicFactor> factors;
  for (const auto& part : split(notation, '*')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw GroupError("expected 'r:a,b,c' in '" + notation + "'");
    Int r = parse_int(part.substr(0, colon), notation);
    auto w = split(part.substr(colon + 1), ',');
    if (w.size() != 3) throw GroupError("expected three weights in '" + part + "'");
    factors.push_back({r, {parse_int(w[0], notation), parse_int(w[1], notation), parse_int(w[2], notation)}});
  }
  return from_factors(factors);
}

void GroupAction::build() {
  elements_.clear();
  Int n = 1;
  for (Int d : generator_orders_) n = checked_mul(n, d);
  elements_.reserve(static_cast<std::size_t>(n));
  for (Int idx = 0; idx < n; ++idx) {
    Int rest = idx;
    IVec3 e{0, 0, 0};
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      Int c = rest % generator_orders_[i];
      rest /= generator_orders_[i];
      e = add(e, scale(generators_[i], c));
    }
    elements_.push_back(reduce_mod(e, denominator_));
  }
  sorted_elements_ = elements_;
  std::sort(sorted_elements_.begin(), sorted_elements_.end());
  if (std::adjacent_find(sorted_elements_.begin(), sorted_elements_.end()) != sorted_elements_.end()) {
    throw GroupError("internal: generators are not independent");
  }

  // A representative monomial per character, smallest total degree first.
  representatives_.assign(static_cast<std::size_t>(n), IVec3{-1, -1, -1});
  Int found = 0;
  Int bound = denominator_;
  for (Int deg = 0; deg <= 3 * bound && found < n; ++deg) {
    for (Int i = 0; i <= deg && found < n; ++i) {
      for (Int j = 0; i + j <= deg && found < n; ++j) {
        IVec3 m{i, j, deg - i - j};
        auto chi = character_of(m);
        auto& slot = representatives_[static_cast<std::size_t>(chi.index)];
        if (slot[0] < 0) {
          slot = m;
          ++found;
        }
      }
    }
  }
  if (found != n) throw GroupError("group action is not faithful");
}

const IVec3& GroupAction::element(Int index) const {
  if (index < 0 || index >= order()) throw GroupError("element index " + std::to_string(index) + " out of range");
  return elements_[static_cast<std::size_t>(index)];
}

Int GroupAction::element_index(const IVec3& scaled) const {
  IVec3 r = reduce_mod(scaled, denominator_);
  if (!std::binary_search(sorted_elements_.begin(), sorted_elements_.end(), r)) return -1;
  auto it = std::find(elements_.begin(), elements_.end(), r);
  return static_cast<Int>(it - elements_.begin());
}

Character GroupAction::character_of(const IVec3& exponent) const {
  Int index = 0;
  Int radix = 1;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    Int d = generator_orders_[i];
    Int val = floor_mod(dot(exponent, generators_[i]), denominator_);
    Int k = val / (denominator_ / d);
    index += k * radix;
    radix *= d;
  }
  return {index};
}

Character GroupAction::coordinate_character(int coordinate) const {
  IVec3 m{0, 0, 0};
  m[static_cast<std::size_t>(coordinate)] = 1;
  return character_of(m);
}

Int GroupAction::coordinate_order(int coordinate) const {
  Int ord = 1;
  for (const auto& g : generators_) {
    Int w = g[static_cast<std::size_t>(coordinate)];
    ord = lcm(ord, denominator_ / gcd(w, denominator_));
  }
  return ord;
}

Character GroupAction::multiply(Character a, Character b) const {
  return character_of(add(representative_monomial(a), representative_monomial(b)));
}

Character GroupAction::inverse(Character a) const { return character_of(scale(representative_monomial(a), -1)); }

std::vector<Character> GroupAction::characters() const {
  std::vector<Character> out;
  for (Int i = 0; i < order(); ++i) out.push_back({i});
  return out;
}

const IVec3& GroupAction::representative_monomial(Character chi) const {
  if (chi.index < 0 || chi.index >= order()) throw GroupError("character index out of range");
  return representatives_[static_cast<std::size_t>(chi.index)];
}

std::string GroupAction::character_name(Character chi) const {
  if (generators_.size() <= 1) return std::to_string(chi.index);
  std::string s = "(";
  Int rest = chi.index;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rest % generator_orders_[i]);
    rest /= generator_orders_[i];
  }
  return s + ")";
}

Lattice GroupAction::lattice() const { return Lattice::overlattice(denominator_, generators_); }

std::string GroupAction::notation() const {
  if (generators_.empty()) return "1:0,0,0";
  std::string s;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    Int d = generator_orders_[i];
    IVec3 w = generators_[i];
    Int k = denominator_ / d;
    if (i) s += '*';
    s += std::to_string(d) + ":" + std::to_string(w[0] / k) + "," + std::to_string(w[1] / k) + "," +
         std::to_string(w[2] / k);
  }
  return s;
}

bool GroupAction::operator==(const GroupAction& other) const {
  if (order() != other.order()) return false;
  Int d = lcm(denominator_, other.denominator_);
  std::vector<IVec3> a, b;
  for (const auto& e : sorted_elements_) a.push_back(scale(e, d / denominator_));
  for (const auto& e : other.sorted_elements_) b.push_back(scale(e, d / other.denominator_));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<JuniorPoint> junior_elements(const GroupAction& group) {
  std::vector<IVec3> scaled;
  for (const auto& e : group.elements()) {
    if (sum(e) == group.denominator()) scaled.push_back(e);
  }
  std::sort(scaled.begin(), scaled.end());
  std::vector<JuniorPoint> out;
  for (const auto& s : scaled) out.push_back(RatVec3::make(s, group.denominator()));
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

std::vector<IVec3> closure(const GroupAction& group, const std::vector<IVec3>& gens) {
  Int d = group.denominator();
  std::set<IVec3> seen{IVec3{0, 0, 0}};
  std::deque<IVec3> queue{IVec3{0, 0, 0}};
  while (!queue.empty()) {
    IVec3 cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IVec3 next = reduce_mod(add(cur, g), d);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

SubgroupSpec finish_subgroup(const GroupAction& group, std::vector<Int> indices, std::vector<IVec3> gens) {
  SubgroupSpec spec;
  spec.generator_indices = std::move(indices);
  spec.elements = closure(group, gens);
  spec.action = GroupAction::from_generators(group.denominator(), gens);
  if (spec.action.order() != spec.order()) throw GroupError("internal: subgroup order mismatch");
  for (const auto& chi : group.characters()) {
    Character r = spec.action.character_of(group.representative_monomial(chi));
    spec.restriction.push_back(r);
    if (r.index == 0) spec.lifted.push_back(chi);
  }
  return spec;
}

}  // namespace

SubgroupSpec make_subgroup(const GroupAction& group, const std::vector<Int>& generator_indices) {
  std::vector<IVec3> gens;
  for (Int i : generator_indices) gens.push_back(group.element(i));
  return finish_subgroup(group, generator_indices, gens);
}

SubgroupSpec subgroup_of_order(const GroupAction& group, Int order) {
  if (!group.is_cyclic()) throw GroupError("--subgroup-order requires a cyclic group; use --subgroup-gens");
  Int r = group.order();
  if (order <= 0 || r % order != 0) {
    throw GroupError("subgroup order " + std::to_string(order) + " does not divide |G| = " + std::to_string(r));
  }
  if (order == 1) return make_subgroup(group, {});
  return make_subgroup(group, {r / order});
}

std::vector<SubgroupSpec> all_subgroups(const GroupAction& group) {
  std::vector<SubgroupSpec> out;
  if (group.is_cyclic()) {
    Int r = group.order();
    for (Int m = 1; m <= r; ++m) {
      if (r % m == 0) out.push_back(subgroup_of_order(group, m));
    }
    return out;
  }
  // Diagonal subgroups of SL3 have rank at most two.
  std::set<std::vector<IVec3>> seen;
  Int n = group.order();
  for (Int i = 0; i < n; ++i) {
    for (Int j = i; j < n; ++j) {
      std::vector<IVec3> gens{group.element(i), group.element(j)};
      auto elems = closure(group, gens);
      if (!seen.insert(elems).second) continue;
      std::vector<Int> idx;
      if (i != 0) idx.push_back(i);
      if (j != 0 && j != i) idx.push_back(j);
      out.push_back(make_subgroup(group, idx));
    }
  }
  std::sort(out.begin(), out.end(), [](const SubgroupSpec& a, const SubgroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Character> lifted_characters(const GroupAction&, const SubgroupSpec& subgroup) { return subgroup.lifted; }

GroupAction subgroup_action(const GroupAction&, const SubgroupSpec& subgroup) { return subgroup.action; }

bool is_subgroup_of(const SubgroupSpec& inner, const SubgroupSpec& outer) {
  return std::includes(outer.elements.begin(), outer.elements.end(), inner.elements.begin(), inner.elements.end());
}

McKayQuiver mckay_quiver(const GroupAction& group) {
  McKayQuiver q;
  q.vertices = group.characters();
  q.dimension_vector.assign(q.vertices.size(), 1);
  for (const auto& chi : q.vertices) {
    for (int i = 0; i < 3; ++i) q.arrows.push_back({chi, group.multiply(chi, group.coordinate_character(i)), i});
  }
  return q;
}

Rational StabilityCondition::total() const {
  Rational s = 0;
  for (const auto& v : values) s += v;
  return s;
}

StabilityCondition zero_generated_theta(const GroupAction& group) {
  StabilityCondition theta;
  theta.values.assign(static_cast<std::size_t>(group.order()), Rational(1));
  theta.values[0] = Rational(1 - group.order());
  return theta;
}

}  // namespace mckay
