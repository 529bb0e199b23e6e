#pragma once

// Brute-force reference implementations used only by tests: expected values
// come from these independent oracles, never from the code under test.

#include <cstdint>
#include <vector>

#include "pgg/graph.hpp"

namespace oracles {

// Every maximal independent set by scanning all subsets. Usable to n <= 20.
std::vector<uint64_t> mis_bruteforce(const pgg::Graph& g);

// All equilibria on the grid with step e*/denom, as integer coordinate
// vectors in units of e*/denom (so e* itself is `denom`). Exact integer
// arithmetic, sorted.
std::vector<std::vector<int>> grid_equilibria(const pgg::Graph& g, int denom);

// Integer test that a grid point (same units) satisfies a support pattern:
// zero off the support, tight neighborhoods on it, covered neighborhoods off
// it.
bool grid_point_matches_support(const pgg::Graph& g,
                                const std::vector<int>& x, int denom,
                                uint64_t support_mask);

}  // namespace oracles
