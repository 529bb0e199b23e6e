#include <doctest.h>

#include "pgg/linalg.hpp"

using namespace pgg;

TEST_CASE("affine solve, unique") {
  // x + y = 3, x - y = 1  ->  (2, 1)
  RatMat a{{rat(1), rat(1)}, {rat(1), rat(-1)}};
  RatVec b{rat(3), rat(1)};
  auto s = solve_affine(a, b);
  REQUIRE(s.consistent);
  CHECK(s.base == RatVec{rat(2), rat(1)});
  CHECK(s.directions.empty());
}

TEST_CASE("affine solve, inconsistent") {
  RatMat a{{rat(1), rat(1)}, {rat(2), rat(2)}};
  RatVec b{rat(1), rat(3)};
  CHECK(!solve_affine(a, b).consistent);
}

TEST_CASE("affine solve, underdetermined") {
  // x + y + z = 1 twice: rank 1, nullspace dim 2
  RatMat a{{rat(1), rat(1), rat(1)}, {rat(1), rat(1), rat(1)}};
  RatVec b{rat(1), rat(1)};
  auto s = solve_affine(a, b);
  REQUIRE(s.consistent);
  CHECK(s.base == RatVec{rat(1), rat(0), rat(0)});
  REQUIRE(s.directions.size() == 2);
  // directions span the constraint's nullspace
  for (auto& d : s.directions) CHECK(vec_sum(d) == rat(0));
  // reduced echelon: direction j has a 1 in its own free column
  CHECK(s.directions[0][1] == rat(1));
  CHECK(s.directions[0][2] == rat(0));
  CHECK(s.directions[1][1] == rat(0));
  CHECK(s.directions[1][2] == rat(1));
}

TEST_CASE("segment vertices") {
  // one free variable t in [0, 1]: rows t >= 0 and 1 - t >= 0
  std::vector<IneqRow> rows;
  rows.push_back({{rat(1)}, rat(0)});
  rows.push_back({{rat(-1)}, rat(1)});
  auto v = polytope_vertices(rows, 1);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == RatVec{rat(0)});
  CHECK(v[1] == RatVec{rat(1)});
}

TEST_CASE("triangle vertices") {
  // t1 >= 0, t2 >= 0, 1 - t1 - t2 >= 0
  std::vector<IneqRow> rows;
  rows.push_back({{rat(1), rat(0)}, rat(0)});
  rows.push_back({{rat(0), rat(1)}, rat(0)});
  rows.push_back({{rat(-1), rat(-1)}, rat(1)});
  auto v = polytope_vertices(rows, 2);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == RatVec{rat(0), rat(0)});
  CHECK(v[1] == RatVec{rat(0), rat(1)});
  CHECK(v[2] == RatVec{rat(1), rat(0)});
}

TEST_CASE("empty polytopes") {
  std::vector<IneqRow> rows;
  rows.push_back({{rat(1)}, rat(-1)});   // t >= 1
  rows.push_back({{rat(-1)}, rat(0)});   // t <= 0
  CHECK(polytope_vertices(rows, 1).empty());

  // constant infeasible row, no variables involved
  std::vector<IneqRow> bad;
  bad.push_back({{rat(0)}, rat(-1)});
  bad.push_back({{rat(1)}, rat(0)});
  bad.push_back({{rat(-1)}, rat(2)});
  CHECK(polytope_vertices(bad, 1).empty());
}

TEST_CASE("redundant and scaled rows collapse") {
  std::vector<IneqRow> rows;
  rows.push_back({{rat(1)}, rat(0)});        // t >= 0
  rows.push_back({{rat(2)}, rat(0)});        // same direction
  rows.push_back({{rat(-1)}, rat(5)});       // t <= 5
  rows.push_back({{rat(-3)}, rat(6)});       // t <= 2, tighter
  auto v = polytope_vertices(rows, 1);
  REQUIRE(v.size() == 2);
  CHECK(v[1] == RatVec{rat(2)});
}

TEST_CASE("degenerate dimensions") {
  auto v0 = polytope_vertices({}, 0);
  REQUIRE(v0.size() == 1);
  CHECK(v0[0].empty());

  std::vector<IneqRow> ok;
  ok.push_back({{rat(0)}, rat(3)});  // constant feasible row only: unbounded t
  CHECK_THROWS_AS(polytope_vertices(ok, 1), std::runtime_error);
}

TEST_CASE("general path box square") {
  // unit square via mixed rows forcing the general enumerator
  std::vector<IneqRow> rows;
  rows.push_back({{rat(1), rat(0)}, rat(0)});
  rows.push_back({{rat(-1), rat(0)}, rat(1)});
  rows.push_back({{rat(0), rat(1)}, rat(0)});
  rows.push_back({{rat(0), rat(-1)}, rat(1)});
  rows.push_back({{rat(1), rat(1)}, rat(0)});  // redundant diagonal
  auto v = polytope_vertices(rows, 2);
  REQUIRE(v.size() == 4);
  CHECK(v[0] == RatVec{rat(0), rat(0)});
  CHECK(v[3] == RatVec{rat(1), rat(1)});
}

TEST_CASE("affine rank") {
  CHECK(affine_rank({}) == -1);
  CHECK(affine_rank({RatVec{rat(1), rat(2)}}) == 0);
  CHECK(affine_rank({RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(1)}}) == 1);
  CHECK(affine_rank({RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(0)},
                     RatVec{rat(0), rat(1)}}) == 2);
  CHECK(affine_rank({RatVec{rat(0), rat(0)}, RatVec{rat(1), rat(1)},
                     RatVec{rat(2), rat(2)}}) == 1);
}
