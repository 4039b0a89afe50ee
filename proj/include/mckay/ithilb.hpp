#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/triangulation.hpp"

namespace mckay {

class ChainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A1 ≤ A2 ≤ ... ≤ As ≤ G; G itself is implicit at the end.
struct IteratedChain {
  GroupAction group;
  std::vector<SubgroupSpec> subgroups;

  /// Throws ChainError unless every entry is a subgroup of G containing the
  /// previous one.
  void validate() const;
};

IteratedChain make_chain(const GroupAction& group, std::vector<SubgroupSpec> subgroups);

/// Triangulation of each stage: As-Hilb in N_{A1}, then the chart-wise
/// refinements up to N'(G). The last entry is the iterated Hilbert scheme.
std::vector<Triangulation> iterated_stages(const IteratedChain& chain);

/// T-Hilb A-Hilb (and longer chains) as a triangulation in N'(G).
Triangulation iterated_hilb(const IteratedChain& chain);

struct ThetaBuildParams {
  Rational epsilon{0};  // 0 selects default_epsilon
};

/// 1 / (4 |G|^2).
Rational default_epsilon(const GroupAction& group);

/// Largest admissible ε (exclusive): |A| - 1, or none for trivial A.
std::optional<Rational> epsilon_bound(const SubgroupSpec& subgroup);

/// ϑ(ρ) = θ_A(ρ|A) + ε θ_T(ρ) for ρ lifted from T = G/A, θ_A(ρ|A) otherwise,
/// with θ_A and θ_T zero generated. Throws std::invalid_argument for an
/// inadmissible ε.
StabilityCondition build_theta(const GroupAction& group, const SubgroupSpec& subgroup, const ThetaBuildParams& params = {});

/// Signs of ϑ are unchanged when ε is halved.
bool epsilon_certified(const GroupAction& group, const SubgroupSpec& subgroup, const ThetaBuildParams& params = {});

/// {ρ : ϑ(ρ) < 0} equals the lifted characters. Returns nullopt (check
/// skipped) for trivial A.
std::optional<bool> check_lemma_sign(const GroupAction& group, const SubgroupSpec& subgroup, const StabilityCondition& theta);

}  // namespace mckay
