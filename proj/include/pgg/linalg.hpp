#pragma once

#include "pgg/rational.hpp"

namespace pgg {

// Solution set of M x = rhs as base + span(directions). Directions form the
// reduced-echelon nullspace basis, ordered by free column index, so the
// parametrization is canonical.
struct AffineSolution {
  bool consistent = false;
  RatVec base;        // particular solution with all free variables at 0
  RatMat directions;  // one vector per free column
};

AffineSolution solve_affine(const RatMat& M, const RatVec& rhs);

// One linear inequality a.t + c0 >= 0 over free parameters.
struct IneqRow {
  RatVec a;
  Rat c0;
};

// Exact vertex enumeration for {t in R^dim : all rows hold}, which must be
// bounded (the callers' regions always are). Empty region gives an empty
// list. Fast path when every inequality touches a single coordinate
// (interval product); otherwise basis enumeration over deduplicated rows,
// guarded against combinatorial blowup (throws std::runtime_error).
std::vector<RatVec> polytope_vertices(std::vector<IneqRow> rows, int dim);

// Dimension of the affine hull of the given points (-1 if none, 0 for one).
int affine_rank(const std::vector<RatVec>& points);

}  // namespace pgg
