#include "mckay/ithilb.hpp"

#include <algorithm>

#include "mckay/nakamura.hpp"

namespace mckay {

namespace {

using Cell = std::array<RatVec3, 3>;

Triangulation assemble(const Lattice& lattice, const std::vector<Cell>& cells) {
  Int d = lattice.denominator();
  std::vector<IVec3> verts;
  for (const auto& c : cells) {
    for (const auto& p : c) verts.push_back(p.scaled_to(d));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Triangle> tris;
  for (const auto& c : cells) {
    Triangle t{};
    for (std::size_t i = 0; i < 3; ++i) {
      t[i] = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), c[i].scaled_to(d)) - verts.begin());
    }
    tris.push_back(t);
  }
  return Triangulation(lattice, std::move(verts), std::move(tris));
}

}  // namespace

void IteratedChain::validate() const {
  const SubgroupSpec* prev = nullptr;
  for (const auto& a : subgroups) {
    for (const auto& e : a.elements) {
      if (!group.contains(e)) throw ChainError("chain entry of order " + std::to_string(a.order()) + " is not a subgroup of G");
    }
    if (prev && !is_subgroup_of(*prev, a)) {
      throw ChainError("chain entry of order " + std::to_string(prev->order()) + " is not contained in the next entry of order " +
                       std::to_string(a.order()));
    }
    prev = &a;
  }
}

IteratedChain make_chain(const GroupAction& group, std::vector<SubgroupSpec> subgroups) {
  IteratedChain chain{group, std::move(subgroups)};
  chain.validate();
  return chain;
}

std::vector<Triangulation> iterated_stages(const IteratedChain& chain) {
  chain.validate();
  const GroupAction& g = chain.group;
  std::vector<Lattice> lattices;
  for (const auto& a : chain.subgroups) lattices.push_back(Lattice::overlattice(g.denominator(), a.elements));
  lattices.push_back(g.lattice());

  std::vector<Cell> cells = {Cell{RatVec3::make({1, 0, 0}, 1), RatVec3::make({0, 1, 0}, 1), RatVec3::make({0, 0, 1}, 1)}};
  std::vector<Triangulation> stages;
  for (const auto& lattice : lattices) {
    std::vector<Cell> next;
    for (const auto& c : cells) {
      auto ctx = HilbContext::chart(c, lattice);
      for (const auto& h : hilb_cells(ctx)) next.push_back(h.vertices);
    }
    cells = std::move(next);
    stages.push_back(assemble(lattice, cells));
  }
  return stages;
}

Triangulation iterated_hilb(const IteratedChain& chain) { return iterated_stages(chain).back(); }

Rational default_epsilon(const GroupAction& group) { return Rational(1, checked_mul(4, checked_mul(group.order(), group.order()))); }

std::optional<Rational> epsilon_bound(const SubgroupSpec& subgroup) {
  if (subgroup.order() <= 1) return std::nullopt;
  return Rational(subgroup.order() - 1);
}

StabilityCondition build_theta(const GroupAction& group, const SubgroupSpec& subgroup, const ThetaBuildParams& params) {
  Rational eps = params.epsilon == Rational(0) ? default_epsilon(group) : params.epsilon;
  if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  if (auto bound = epsilon_bound(subgroup); bound && eps >= *bound) {
    throw std::invalid_argument("epsilon must be below |A| - 1 = " + std::to_string(bound->numerator()));
  }
  Int order_a = subgroup.order();
  Int order_t = group.order() / order_a;
  StabilityCondition theta;
  theta.values.assign(static_cast<std::size_t>(group.order()), Rational(0));
  for (const auto& rho : group.characters()) {
    Character restricted = subgroup.restriction.at(static_cast<std::size_t>(rho.index));
    Rational v = restricted.index == 0 ? Rational(1 - order_a) : Rational(1);
    bool lifted = std::binary_search(subgroup.lifted.begin(), subgroup.lifted.end(), rho);
    if (lifted) v += eps * (rho.index == 0 ? Rational(1 - order_t) : Rational(1));
    theta.values[static_cast<std::size_t>(rho.index)] = v;
  }
  return theta;
}

bool epsilon_certified(const GroupAction& group, const SubgroupSpec& subgroup, const ThetaBuildParams& params) {
  Rational eps = params.epsilon == Rational(0) ? default_epsilon(group) : params.epsilon;
  auto a = build_theta(group, subgroup, {eps});
  auto b = build_theta(group, subgroup, {eps / Rational(2)});
  auto sign = [](const Rational& r) { return r < Rational(0) ? -1 : (r > Rational(0) ? 1 : 0); };
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (sign(a.values[i]) != sign(b.values[i])) return false;
  }
  return true;
}

std::optional<bool> check_lemma_sign(const GroupAction& group, const SubgroupSpec& subgroup, const StabilityCondition& theta) {
  if (subgroup.order() <= 1) return std::nullopt;
  std::vector<Character> negative;
  for (const auto& rho : group.characters()) {
    if (theta(rho) < Rational(0)) negative.push_back(rho);
  }
  return negative == subgroup.lifted;
}

}  // namespace mckay
