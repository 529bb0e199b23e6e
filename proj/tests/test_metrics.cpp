#include <doctest.h>

#include <cmath>

#include "pgg/equilibria.hpp"
#include "pgg/generators.hpp"
#include "pgg/graph.hpp"
#include "pgg/metrics.hpp"

using namespace pgg;

static RatVec rv(std::vector<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(rat(x, 1));
  return v;
}

TEST_CASE("welfare is exact at tight neighborhoods") {
  Graph c4 = make_cycle(4);
  EffortProfile uniform{RatVec(4, rat(1, 3)), rat(1)};
  // every closed neighborhood sums to exactly e*, so the curvature cancels
  for (double k : {1e-3, 0.7, 1.0, 42.0, 1e3}) {
    auto bf = make_benefit(rat(1), rat(1), rat(1), k, 4);
    CHECK(welfare(bf, c4, uniform) ==
          doctest::Approx(4.0 - 4.0 / 3.0).epsilon(1e-15));
  }
}

TEST_CASE("utility of lone and paired agents") {
  auto bf = make_benefit(rat(2), rat(3), rat(1), 1.0, 2);
  Graph lone(1);
  EffortProfile p{rv({1}), rat(1)};
  CHECK(utility(bf, lone, p, 0) == doctest::Approx(-1.0));  // b0 - c e*

  Graph p2 = make_path(2);
  EffortProfile q{rv({1, 0}), rat(1)};
  CHECK(utility(bf, p2, q, 0) == doctest::Approx(-1.0));
  CHECK(utility(bf, p2, q, 1) == doctest::Approx(2.0));  // free ride at b0
}

TEST_CASE("cost and weighted effort") {
  EffortProfile p{RatVec{rat(1, 2), rat(1, 3)}, rat(1)};
  CHECK(cost(rat(3), p) == rat(5, 2));
  CHECK(weighted_effort(RatVec{rat(2), rat(3)}, p) == rat(2));
  CHECK_THROWS_AS(cost(rat(0), p), std::invalid_argument);
}

TEST_CASE("role classification") {
  Graph p2 = make_path(2);
  auto c1 = classify(p2, {RatVec{rat(2, 5), rat(3, 5)}, rat(1)});
  CHECK(c1.kind == ProfileKind::distributed);
  CHECK(c1.roles[0] == AgentRole::co_specialist);
  CHECK(c1.roles[1] == AgentRole::co_specialist);
  REQUIRE(c1.co_specialist_links.size() == 1);
  CHECK(c1.co_specialist_links[0] == std::pair<int, int>{0, 1});

  auto c2 = classify(p2, {rv({1, 0}), rat(1)});
  CHECK(c2.kind == ProfileKind::specialized);
  CHECK(c2.roles[0] == AgentRole::specialist);
  CHECK(c2.roles[1] == AgentRole::free_rider);
  CHECK(c2.co_specialist_links.empty());

  Graph p4 = make_path(4);
  auto c3 = classify(p4, {RatVec{rat(1, 2), rat(1, 2), rat(0), rat(1)},
                          rat(1)});
  CHECK(c3.kind == ProfileKind::hybrid);
  CHECK(c3.roles[0] == AgentRole::co_specialist);
  CHECK(c3.roles[1] == AgentRole::co_specialist);
  CHECK(c3.roles[2] == AgentRole::free_rider);
  CHECK(c3.roles[3] == AgentRole::specialist);
  REQUIRE(c3.co_specialist_links.size() == 1);
  CHECK(c3.co_specialist_links[0] == std::pair<int, int>{0, 1});

  Graph c4g = make_cycle(4);
  auto c4 = classify(c4g, {RatVec(4, rat(1, 3)), rat(1)});
  CHECK(c4.kind == ProfileKind::distributed);
  for (int i = 0; i < 4; ++i)
    CHECK(c4.roles[i] == AgentRole::other_supporting);
  CHECK(c4.co_specialist_links.empty());

  CHECK_THROWS_AS(classify(p2, {rv({1, 1}), rat(1)}), std::invalid_argument);
}

TEST_CASE("structure checks hold on every enumerated piece") {
  std::vector<Graph> cases{make_path(2), make_path(4), make_cycle(4),
                           make_complete(3), make_star(3), make_path(5)};
  SeededRng rng(3);
  for (int t = 0; t < 8; ++t) cases.push_back(gen_connected(6, 0.3, rng));
  for (auto& g : cases) {
    auto es = enumerate_pieces(g, rat(1));
    for (auto& piece : es.pieces) {
      for (auto& v : piece.vertices) {
        auto rep = check_equilibrium_structure(g, {v, rat(1)});
        CHECK(rep.ok);
        if (!rep.ok)
          for (auto& f : rep.failures) MESSAGE(f);
        CHECK(check_pendant_rules(g, {v, rat(1)}).ok);
      }
      EffortProfile mid{piece.barycenter(), rat(1)};
      CHECK(check_equilibrium_structure(g, mid).ok);
      CHECK(check_pendant_rules(g, mid).ok);
    }
  }
}

TEST_CASE("structure check flags corrupted profiles") {
  Graph p4 = make_path(4);
  EffortProfile good{rv({1, 0, 0, 1}), rat(1)};
  REQUIRE(check_equilibrium_structure(p4, good).ok);
  EffortProfile bumped = good;
  bumped.x[1] = rat(1, 100);
  auto rep = check_equilibrium_structure(p4, bumped);
  CHECK(!rep.ok);
  CHECK(!rep.failures.empty());
  EffortProfile starved = good;
  starved.x[3] = rat(0);
  CHECK(!check_equilibrium_structure(p4, starved).ok);
}

TEST_CASE("proximal stability necessary condition") {
  CHECK(stability_necessary(make_cycle(4), {rv({1, 0, 1, 0}), rat(1)}));
  CHECK(stability_necessary(make_star(3), {rv({0, 1, 1, 1}), rat(1)}));
  CHECK(!stability_necessary(make_star(3), {rv({1, 0, 0, 0}), rat(1)}));
  CHECK(!stability_necessary(make_path(3), {rv({0, 1, 0}), rat(1)}));
  CHECK(!stability_necessary(make_path(4), {rv({1, 0, 0, 1}), rat(1)}));
  CHECK(!stability_necessary(make_path(2), {rv({1, 0}), rat(1)}));
  // distributed profiles are never proximally stable
  Graph c4 = make_cycle(4);
  CHECK(!stability_necessary(c4, {RatVec(4, rat(1, 3)), rat(1)}));
}

TEST_CASE("pendant co-specialist improvement") {
  Graph p4 = make_path(4);
  EffortProfile x{RatVec{rat(1, 2), rat(1, 2), rat(0), rat(1)}, rat(1)};
  EffortProfile y = improve_pendant_cospecialist(p4, x, 0);
  CHECK(y.x == rv({0, 1, 0, 1}));
  CHECK(cost(rat(1), y) == cost(rat(1), x));
  for (double k : {0.05, 1.0, 30.0}) {
    auto bf = make_benefit(rat(1), rat(1), rat(1), k, 4);
    CHECK(welfare(bf, p4, y) > welfare(bf, p4, x) + 1e-12);
  }
  CHECK(classify(p4, y).kind == ProfileKind::specialized);

  // dependant id must be degree one
  CHECK_THROWS_AS(improve_pendant_cospecialist(p4, x, 1),
                  std::invalid_argument);
  // co-dependant pairs cannot be improved
  Graph p2 = make_path(2);
  EffortProfile half{RatVec{rat(1, 2), rat(1, 2)}, rat(1)};
  CHECK_THROWS_AS(improve_pendant_cospecialist(p2, half, 0),
                  std::invalid_argument);
  // the pair must actually be a co-specialist link
  EffortProfile spec{rv({1, 0, 0, 1}), rat(1)};
  CHECK_THROWS_AS(improve_pendant_cospecialist(p4, spec, 0),
                  std::invalid_argument);
}

TEST_CASE("forest support specialization") {
  Graph p4 = make_path(4);
  EffortProfile x{RatVec{rat(1, 2), rat(1, 2), rat(0), rat(1)}, rat(1)};
  EffortProfile y = forest_specialize_support(p4, x);
  CHECK(y.x == rv({1, 0, 0, 1}));
  CHECK(vec_sum(y.x) == vec_sum(x.x));

  EffortProfile already{rv({0, 1, 0, 1}), rat(1)};
  CHECK(forest_specialize_support(p4, already).x == already.x);

  CHECK_THROWS_AS(
      forest_specialize_support(make_cycle(4), {RatVec(4, rat(1, 3)), rat(1)}),
      std::invalid_argument);

  // random forest pieces always specialize with equal total effort
  SeededRng rng(29);
  for (int t = 0; t < 8; ++t) {
    Graph f = gen_forest(7, 0.8, rng);
    bool isolated = false;
    for (int v = 0; v < 7; ++v)
      if (f.degree(v) == 0) isolated = true;
    if (isolated) continue;
    auto es = enumerate_pieces(f, rat(1));
    for (auto& piece : es.pieces) {
      EffortProfile mid{piece.barycenter(), rat(1)};
      EffortProfile spec = forest_specialize_support(f, mid);
      CHECK(check_equilibrium(f, spec).ok);
      CHECK(vec_sum(spec.x) == vec_sum(mid.x));
      CHECK(classify(f, spec).kind == ProfileKind::specialized);
    }
  }
}

TEST_CASE("forest cost formula") {
  Graph p4 = make_path(4);
  EffortProfile x{RatVec{rat(1, 2), rat(1, 2), rat(0), rat(1)}, rat(1)};
  CHECK(forest_cost_formula(p4, rat(1), x) == rat(2));
  CHECK(forest_cost_formula(p4, rat(3), x) == rat(6));
  EffortProfile spec{rv({1, 0, 1, 0}), rat(1)};
  CHECK(forest_cost_formula(p4, rat(1), spec) == rat(2));
  CHECK_THROWS_AS(
      forest_cost_formula(make_cycle(4), rat(1), {RatVec(4, rat(1, 3)), rat(1)}),
      std::invalid_argument);

  SeededRng rng(41);
  for (int t = 0; t < 6; ++t) {
    Graph f = gen_tree(7, rng);
    auto es = enumerate_pieces(f, rat(1));
    for (auto& piece : es.pieces)
      for (auto& p : sample_piece(piece, rat(1), 3, 1000 + t))
        CHECK(forest_cost_formula(f, rat(2), p) == cost(rat(2), p));
  }
}
