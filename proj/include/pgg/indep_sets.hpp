#pragma once

#include "pgg/graph.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// All maximal independent sets, sorted by member list. Recursive branch on
// the highest-degree undecided vertex; branches where an excluded vertex can
// no longer acquire an included neighbor are cut early.
std::vector<NodeSet> enumerate_mis(const Graph& g);

// alpha: size of a largest independent set.
int independence_number(const Graph& g);

// beta: size of a smallest maximal independent set (independent domination).
int independent_domination_number(const Graph& g);

struct WeightedIndependence {
  Rat weight;        // max total weight over independent sets
  NodeSet witness;   // maximal set attaining it; lex-smallest member list
  long tie_count;    // number of maximal independent sets attaining it
};

// Max weight of an independent set for nonnegative rational weights. With
// w >= 0 the optimum is always attained at some maximal set.
WeightedIndependence weighted_independence(const Graph& g, const RatVec& w);

// true iff every maximal independent set has maximum size (alpha == beta)
bool is_well_covered(const Graph& g);

}  // namespace pgg
