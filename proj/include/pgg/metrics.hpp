#pragma once

#include <string>
#include <utility>

#include "pgg/benefit.hpp"
#include "pgg/equilibria.hpp"
#include "pgg/graph.hpp"

namespace pgg {

Rat neighborhood_effort(const Graph& g, const RatVec& x, int i);

// Sum of utilities: sum of benefits at neighborhood efforts minus total cost.
double welfare(const BenefitFunction& bf, const Graph& g,
               const EffortProfile& p);
double utility(const BenefitFunction& bf, const Graph& g,
               const EffortProfile& p, int i);

Rat weighted_effort(const RatVec& w, const EffortProfile& p);
Rat cost(const Rat& c, const EffortProfile& p);

enum class AgentRole { specialist, free_rider, co_specialist, other_supporting };
enum class ProfileKind { specialized, distributed, hybrid };

struct ProfileClassification {
  ProfileKind kind = ProfileKind::hybrid;
  std::vector<AgentRole> roles;
  std::vector<std::pair<int, int>> co_specialist_links;  // i < j, adjacent
};

// Roles: specialist (x_i = e*), free rider (x_i = 0), co-specialist (pair of
// adjacent positive efforts summing to e*), other supporting. Kind:
// specialized = only specialists and free riders; distributed = nobody free
// rides; hybrid otherwise. Rejects non-equilibrium input.
ProfileClassification classify(const Graph& g, const EffortProfile& p);

struct StructureReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Structural facts every equilibrium satisfies; each failure names the
// violated fact. Covers: support dominates, specialists independent,
// co-specialist links form a matching, effort chain
// x_i <= e* <= neighborhood effort <= d_i e* with its equality cases, and
// isolated agents at exactly e*.
StructureReport check_equilibrium_structure(const Graph& g,
                                            const EffortProfile& p);

// Role constraints at degree-1 agents and their guardians: a dependant never
// plays "other supporting"; a specialist dependant's guardian free rides; a
// free-riding dependant's guardian is a specialist; a co-specialist
// dependant is its guardian's only dependant; guardians with two or more
// dependants see a uniform dependant role.
StructureReport check_pendant_rules(const Graph& g, const EffortProfile& p);

// Necessary condition for proximal stability: the profile is specialized and
// every free rider has at least two specialist neighbors.
bool stability_necessary(const Graph& g, const EffortProfile& p);

// For a co-specialist pair (dependant, guardian) where the guardian has
// another neighbor: shift the pair's joint effort onto the guardian. Total
// effort is preserved and welfare strictly increases (benefit is strictly
// increasing and some third agent's neighborhood gains the dependant's old
// effort). Throws unless the preconditions hold.
EffortProfile improve_pendant_cospecialist(const Graph& g,
                                           const EffortProfile& p,
                                           int dependant);

// On a forest: the lexicographically smallest maximal independent set inside
// the support, as a specialized profile. Total effort matches the input
// exactly; specialized inputs come back unchanged.
EffortProfile forest_specialize_support(const Graph& g,
                                        const EffortProfile& p);

// On a forest: cost equals c e* (#specialists + #co-specialists / 2).
// Returns that value after checking it against the actual cost.
Rat forest_cost_formula(const Graph& g, const Rat& c, const EffortProfile& p);

}  // namespace pgg
