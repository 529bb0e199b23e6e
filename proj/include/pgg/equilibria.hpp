#pragma once

#include <cstdint>
#include <optional>

#include "pgg/graph.hpp"
#include "pgg/linalg.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// Effort profile of one game instance: exact efforts plus the effort level
// e* at which marginal benefit equals marginal cost.
struct EffortProfile {
  RatVec x;
  Rat e_star = 1;
};

// Closed neighborhood effort of every agent: x_i + sum over neighbors.
RatVec neighborhood_efforts(const Graph& g, const RatVec& x);

struct EquilibriumViolation {
  enum Kind {
    negative_effort,          // x_i < 0
    coverage_below_minimum,   // closed neighborhood effort < e*
    supporter_not_tight,      // x_i > 0 but closed neighborhood effort != e*
  };
  int agent;
  Kind kind;
};

struct EquilibriumCheck {
  bool ok = false;
  std::vector<EquilibriumViolation> violations;
};

// Exact equilibrium test: x >= 0, every closed neighborhood effort >= e*,
// and each agent either exerts nothing or has a tight neighborhood.
EquilibriumCheck check_equilibrium(const Graph& g, const EffortProfile& p);

// One polyhedral patch of the equilibrium set: all equilibria whose support
// is contained in `support` with tight neighborhoods across the support.
// Geometry is affine base + span(directions), cut by `constraints` over the
// direction coefficients; `vertices` caches the exact extreme points.
struct EquilibriumPiece {
  NodeSet support;
  RatVec base;                    // length n
  RatMat directions;              // each length n
  std::vector<IneqRow> constraints;  // over direction coefficients
  std::vector<RatVec> vertices;   // in effort space, lex sorted
  int dim = 0;                    // affine dimension of the polytope

  RatVec barycenter() const;      // exact average of vertices
  bool contains(const Graph& g, const Rat& e_star, const RatVec& x) const;
};

struct EquilibriumSet {
  int n = 0;
  Rat e_star = 1;
  std::vector<EquilibriumPiece> pieces;  // sorted by support member list
};

// Enumerates every equilibrium piece: candidate supports are the dominating
// vertex sets; each gives an exact tight linear system; empty patches are
// dropped and patches with identical point sets are merged (the smallest,
// then lexicographically smallest, support is kept as canonical).
// The union of pieces is exactly the equilibrium set.
EquilibriumSet enumerate_pieces(const Graph& g, const Rat& e_star,
                                int max_n = 16);

// Profile with effort e* exactly on the given set, which must be a maximal
// independent set (independent and dominating); throws otherwise.
EffortProfile specialized_from_mis(const Graph& g, const Rat& e_star,
                                   const NodeSet& s);

// One specialized equilibrium per maximal independent set, in set order.
std::vector<EffortProfile> enumerate_specialized(const Graph& g,
                                                 const Rat& e_star);

// The full-support piece, if it holds a strictly positive point (checked at
// the exact barycenter, which lies in the relative interior).
std::optional<EquilibriumPiece> distributed_piece(const EquilibriumSet& es);

// Deterministic sample of `count` points inside the piece: random positive
// rational convex combinations of the vertices, so samples land in the
// relative interior. Throws on an empty piece.
std::vector<EffortProfile> sample_piece(const EquilibriumPiece& piece,
                                        const Rat& e_star, int count,
                                        uint64_t seed);

}  // namespace pgg
