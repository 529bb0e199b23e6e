#pragma once

#include <optional>

#include "pgg/benefit.hpp"
#include "pgg/equilibria.hpp"
#include "pgg/graph.hpp"
#include "pgg/metrics.hpp"

namespace pgg {

// Exact maximum of a linear functional over the whole equilibrium set.
// Witness rule: piece with the lexicographically smallest support among the
// maximizers, then its lexicographically smallest attaining vertex.
struct LinearOptimum {
  Rat value;
  EffortProfile witness;
  int piece_index = -1;
  long tie_pieces = 0;  // pieces attaining the optimum
};

LinearOptimum max_linear(const EquilibriumSet& es, const RatVec& mu);

// c * minimum total effort over all equilibria.
LinearOptimum min_cost(const EquilibriumSet& es, const Rat& c);

// Maximum weighted effort over all equilibria, w >= 0.
LinearOptimum max_weighted_effort(const EquilibriumSet& es, const RatVec& w);

// Extremes over specialized equilibria only (one per maximal independent
// set): exact weighted effort and cost, floating-point welfare.
struct SpecializedExtrema {
  double max_welfare = 0;
  EffortProfile max_welfare_witness;
  Rat max_weighted_effort;
  EffortProfile max_weighted_effort_witness;
  long max_weighted_effort_ties = 0;
  Rat min_cost;
  EffortProfile min_cost_witness;
  long min_cost_ties = 0;
};

SpecializedExtrema specialized_extrema(const Graph& g, const Rat& e_star,
                                       const BenefitFunction& bf,
                                       const RatVec& w, const Rat& c);

// Welfare maximization piece by piece: each piece is a compact polytope with
// known vertices, so conditional-gradient steps use an exact linear oracle
// (argmax over vertices) plus exact line search by bisection on the
// directional derivative. `gap` reports the worst final duality bound; a
// piece's result is never below its best vertex.
struct WelfareOptimum {
  double value = 0;
  std::vector<double> witness;
  int piece_index = -1;
  double gap = 0;
  bool converged = true;
  int iterations = 0;  // largest per-piece iteration count used
};

WelfareOptimum max_welfare(const EquilibriumSet& es, const Graph& g,
                           const BenefitFunction& bf, double gap_tol = 1e-9,
                           int max_iter = 10000);

// Infimum of welfare and minimum cost over equilibria where everyone
// contributes. Both are attained on the closure (the full-support piece);
// witnesses with a zero coordinate are flagged as closure witnesses.
struct DistributedExtrema {
  bool exists = false;
  double min_welfare = 0;
  EffortProfile min_welfare_witness;
  bool min_welfare_closure = false;
  Rat min_cost;
  EffortProfile min_cost_witness;
  bool min_cost_closure = false;
};

DistributedExtrema distributed_extrema(const EquilibriumSet& es,
                                       const Graph& g,
                                       const BenefitFunction& bf,
                                       const Rat& c);

// Linear sandwich around the welfare of a profile, from the per-agent slope
// vectors. Requires no isolated vertices.
struct WelfareBounds {
  double lower = 0;
  double upper = 0;
};

WelfareBounds welfare_bounds(const BenefitFunction& bf, const Graph& g,
                             const EffortProfile& p);

// Closed-form welfare limits: at vanishing curvature the best equilibrium
// welfare approaches n(b(e*) - c e*) + c e* alpha_d (alpha_d = max
// degree-weighted independent set); at extreme curvature, on forests, it
// approaches n b(e*) - c e* beta.
struct LimitTargets {
  double high_concavity_welfare = 0;
  NodeSet high_witness;
  std::optional<double> low_concavity_welfare;
  std::optional<NodeSet> low_witness;
};

LimitTargets limit_targets(const Graph& g, const BenefitFunction& bf);

}  // namespace pgg
