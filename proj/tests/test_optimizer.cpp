#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pgg/equilibria.hpp"
#include "pgg/generators.hpp"
#include "pgg/graph.hpp"
#include "pgg/indep_sets.hpp"
#include "pgg/metrics.hpp"
#include "pgg/optimizer.hpp"

using namespace pgg;

static RatVec rv(std::vector<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(rat(x, 1));
  return v;
}

// graph with a genuinely two-dimensional curved welfare piece: hub 0 sits
// between the pairs (1,2) and (3,4)
static Graph make_spider() {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  return g;
}

// all welfare values on a barycentric grid over the piece's vertices
static double grid_welfare_max(const Graph& g, const BenefitFunction& bf,
                               const EquilibriumPiece& piece,
                               const Rat& e_star, int granularity) {
  size_t nv = piece.vertices.size();
  std::vector<int> w(nv, 0);
  w[0] = granularity;
  double best = -1e300;
  // odometer over compositions of `granularity` into nv parts
  while (true) {
    RatVec x(piece.vertices[0].size(), rat(0));
    for (size_t v = 0; v < nv; ++v) {
      if (w[v] == 0) continue;
      Rat lambda = rat(w[v], granularity);
      for (size_t i = 0; i < x.size(); ++i)
        x[i] += lambda * piece.vertices[v][i];
    }
    best = std::max(best, welfare(bf, g, {x, e_star}));
    // next composition
    if (w[nv - 1] == granularity) break;
    int i = static_cast<int>(nv) - 2;
    while (i >= 0 && w[i] == 0) --i;
    if (i < 0) break;
    int rest = 0;
    for (size_t j = i + 1; j < nv; ++j) {
      rest += w[j];
      w[j] = 0;
    }
    --w[i];
    w[i + 1] = rest + 1;
  }
  return best;
}

TEST_CASE("linear maxima over the equilibrium set") {
  auto es = enumerate_pieces(make_path(4), rat(1));
  auto r = max_weighted_effort(es, RatVec{rat(1), rat(2), rat(2), rat(1)});
  CHECK(r.value == rat(3));
  CHECK(r.witness.x == rv({0, 1, 0, 1}));
  CHECK(r.tie_pieces == 4);
  CHECK(es.pieces[r.piece_index].support.members == std::vector<int>{0, 1, 3});

  auto single = max_linear(es, RatVec{rat(1), rat(0), rat(0), rat(0)});
  CHECK(single.value == rat(1));
  CHECK(single.witness.x == rv({1, 0, 0, 1}));
  CHECK(single.tie_pieces == 4);

  RatVec bad{rat(1), rat(-1), rat(0), rat(0)};
  CHECK_THROWS_AS(max_weighted_effort(es, bad), std::invalid_argument);
}

TEST_CASE("weighted effort maximum equals the weighted independence number") {
  SeededRng rng(59);
  for (int t = 0; t < 12; ++t) {
    Graph g = gen_gnp(6, 0.4, rng);
    RatVec w;
    for (int i = 0; i < 6; ++i) w.push_back(rng.small_rat(5, 3));
    auto es = enumerate_pieces(g, rat(1));
    auto r = max_weighted_effort(es, w);
    CHECK(r.value == weighted_independence(g, w).weight);
    CHECK(check_equilibrium(g, r.witness).ok);
    CHECK(dot(w, r.witness.x) == r.value);
  }
}

TEST_CASE("minimum cost pins") {
  auto p4 = enumerate_pieces(make_path(4), rat(1));
  auto rp = min_cost(p4, rat(1));
  CHECK(rp.value == rat(2));
  CHECK(rp.tie_pieces == 5);
  CHECK(rp.witness.x == rv({0, 1, 0, 1}));

  auto c4 = enumerate_pieces(make_cycle(4), rat(1));
  auto rc = min_cost(c4, rat(1));
  CHECK(rc.value == rat(4, 3));
  CHECK(rc.witness.x == RatVec(4, rat(1, 3)));
  CHECK(rc.tie_pieces == 1);

  auto k3 = enumerate_pieces(make_complete(3), rat(1));
  auto rk = min_cost(k3, rat(2));
  CHECK(rk.value == rat(2));
  CHECK(rk.tie_pieces == 7);

  auto star = enumerate_pieces(make_star(3), rat(1));
  CHECK(min_cost(star, rat(1)).value == rat(1));
  CHECK(min_cost(star, rat(1)).witness.x == rv({1, 0, 0, 0}));

  // cycles and the cube: cost floor n e* / (d + 1)
  CHECK(min_cost(enumerate_pieces(make_cycle(6), rat(1)), rat(1)).value ==
        rat(2));
  CHECK(min_cost(enumerate_pieces(make_cube(), rat(1)), rat(1)).value ==
        rat(2));
}

TEST_CASE("specialized extrema") {
  Graph p4 = make_path(4);
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 4);
  auto se = specialized_extrema(p4, rat(1), bf, RatVec(4, rat(1)), rat(1));
  // both end-anchored sets see one doubled neighborhood: welfare 3 b0 + b(2e*)
  // minus cost 2, and {0,2} is the first to attain it
  double b2 = bf.value(2.0);
  CHECK(se.max_welfare == doctest::Approx(1.0 + b2).epsilon(1e-12));
  CHECK(se.max_welfare_witness.x == rv({1, 0, 1, 0}));
  CHECK(se.max_weighted_effort == rat(2));
  CHECK(se.max_weighted_effort_ties == 3);
  CHECK(se.max_weighted_effort_witness.x == rv({1, 0, 1, 0}));
  CHECK(se.min_cost == rat(2));
  CHECK(se.min_cost_ties == 3);

  Graph star = make_star(3);
  auto st = specialized_extrema(star, rat(1), bf, RatVec(4, rat(1)), rat(1));
  CHECK(st.max_weighted_effort == rat(3));
  CHECK(st.max_weighted_effort_witness.x == rv({0, 1, 1, 1}));
  CHECK(st.min_cost == rat(1));
  CHECK(st.min_cost_witness.x == rv({1, 0, 0, 0}));
  CHECK(st.min_cost_ties == 1);
}

TEST_CASE("welfare maximization on flat pieces") {
  Graph p2 = make_path(2);
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 2);
  auto es = enumerate_pieces(p2, rat(1));
  auto r = max_welfare(es, p2, bf);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.converged);
  CHECK(r.gap <= 1e-9);

  // triangle: everything is tight everywhere, welfare constant 3 b0 - c e*
  Graph k3 = make_complete(3);
  auto rk = max_welfare(enumerate_pieces(k3, rat(1)), k3, bf);
  CHECK(rk.value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("welfare maximum dominates every specialized equilibrium") {
  SeededRng rng(67);
  for (int t = 0; t < 10; ++t) {
    Graph g = gen_connected(6, 0.3, rng);
    auto es = enumerate_pieces(g, rat(1));
    for (double k : {0.01, 1.0, 100.0}) {
      auto bf = make_benefit(rat(1), rat(1), rat(1), k, 6);
      auto fw = max_welfare(es, g, bf);
      CHECK(fw.converged);
      auto se =
          specialized_extrema(g, rat(1), bf, RatVec(6, rat(1)), rat(1));
      CHECK(fw.value >= se.max_welfare - 1e-9);
      REQUIRE(fw.piece_index >= 0);
      CHECK(fw.witness.size() == size_t(g.n()));
    }
  }
}

TEST_CASE("conditional gradient agrees with a barycentric grid") {
  std::vector<Graph> cases{make_path(4), make_spider(), make_path(5)};
  SeededRng rng(73);
  for (int t = 0; t < 4; ++t) cases.push_back(gen_tree(6, rng));
  for (auto& g : cases) {
    auto es = enumerate_pieces(g, rat(1));
    for (auto& piece : es.pieces) {
      if (piece.dim < 1 || piece.dim > 2) continue;
      if (piece.vertices.size() > 4) continue;
      int gran = piece.vertices.size() <= 2 ? 200 : 40;
      // restrict the set to this one piece to isolate the solver
      EquilibriumSet one;
      one.n = es.n;
      one.e_star = es.e_star;
      one.pieces.push_back(piece);
      for (double k : {0.01, 1.0}) {
        auto bf = make_benefit(rat(1), rat(1), rat(1), k, g.n());
        auto fw = max_welfare(one, g, bf);
        double gm = grid_welfare_max(g, bf, piece, es.e_star, gran);
        CHECK(gm <= fw.value + 1e-6);
        CHECK(fw.value <= gm + 1e-3);
      }
      auto sharp = make_benefit(rat(1), rat(1), rat(1), 100.0, g.n());
      auto fw = max_welfare(one, g, sharp);
      CHECK(grid_welfare_max(g, sharp, piece, es.e_star, gran) <=
            fw.value + 1e-6);
    }
  }
}

TEST_CASE("distributed extrema") {
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 4);

  auto c4 = enumerate_pieces(make_cycle(4), rat(1));
  auto dc = distributed_extrema(c4, make_cycle(4), bf, rat(1));
  REQUIRE(dc.exists);
  CHECK(dc.min_welfare == doctest::Approx(4.0 - 4.0 / 3.0).epsilon(1e-14));
  CHECK(dc.min_welfare_witness.x == RatVec(4, rat(1, 3)));
  CHECK(!dc.min_welfare_closure);
  CHECK(dc.min_cost == rat(4, 3));
  CHECK(!dc.min_cost_closure);

  auto p2 = enumerate_pieces(make_path(2), rat(1));
  auto dp = distributed_extrema(p2, make_path(2), bf, rat(1));
  REQUIRE(dp.exists);
  CHECK(dp.min_welfare == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dp.min_cost == rat(1));
  CHECK(dp.min_welfare_closure);  // the witness vertex parks an agent at zero
  CHECK(dp.min_cost_closure);

  auto p4 = enumerate_pieces(make_path(4), rat(1));
  CHECK(!distributed_extrema(p4, make_path(4), bf, rat(1)).exists);
}

TEST_CASE("welfare sandwich brackets sampled equilibria") {
  std::vector<Graph> cases{make_path(2), make_path(4), make_cycle(4),
                           make_complete(3), make_star(3)};
  for (auto& g : cases) {
    auto es = enumerate_pieces(g, rat(1));
    for (double k : {0.01, 1.0, 100.0}) {
      auto bf = make_benefit(rat(1), rat(1), rat(1), k, g.n());
      for (auto& piece : es.pieces) {
        for (auto& v : piece.vertices) {
          EffortProfile p{v, rat(1)};
          double w = welfare(bf, g, p);
          auto wb = welfare_bounds(bf, g, p);
          CHECK(wb.lower <= w + 1e-9);
          CHECK(w <= wb.upper + 1e-9);
        }
        for (auto& p : sample_piece(piece, rat(1), 4, 7)) {
          double w = welfare(bf, g, p);
          auto wb = welfare_bounds(bf, g, p);
          CHECK(wb.lower <= w + 1e-9);
          CHECK(w <= wb.upper + 1e-9);
        }
      }
    }
  }
}

TEST_CASE("sandwich is tight on a single link") {
  Graph p2 = make_path(2);
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 2);
  EffortProfile p{rv({1, 0}), rat(1)};
  auto wb = welfare_bounds(bf, p2, p);
  double w = welfare(bf, p2, p);
  CHECK(wb.lower == doctest::Approx(w).epsilon(1e-13));
  CHECK(wb.upper == doctest::Approx(w).epsilon(1e-13));
}

TEST_CASE("closed-form welfare limits") {
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 4);
  auto p4 = limit_targets(make_path(4), bf);
  CHECK(p4.high_concavity_welfare == doctest::Approx(3.0));
  CHECK(p4.high_witness.members == std::vector<int>{0, 2});
  REQUIRE(p4.low_concavity_welfare.has_value());
  CHECK(*p4.low_concavity_welfare == doctest::Approx(2.0));
  CHECK(p4.low_witness->members == std::vector<int>{0, 2});

  auto c4 = limit_targets(make_cycle(4), bf);
  CHECK(c4.high_concavity_welfare == doctest::Approx(4.0));
  CHECK(!c4.low_concavity_welfare.has_value());

  Graph lonely(2);
  CHECK_THROWS_AS(limit_targets(lonely, bf), std::invalid_argument);
}

TEST_CASE("welfare maximum approaches the closed-form limits") {
  // nearly linear benefit: welfare max climbs toward the degree-weighted
  // independence target
  for (Graph g : {make_path(4), make_cycle(4)}) {
    auto es = enumerate_pieces(g, rat(1));
    double prev_err = 1e18;
    for (double sigma : {0.9, 0.99, 0.999}) {
      double k = solve_k_for_sigma(sigma, g.n(), rat(1));
      auto bf = make_benefit(rat(1), rat(1), rat(1), k, g.n());
      auto fw = max_welfare(es, g, bf);
      auto lt = limit_targets(g, bf);
      double err = std::abs(fw.value - lt.high_concavity_welfare);
      CHECK(err < prev_err);
      prev_err = err;
    }
    CHECK(prev_err < 5e-3);
  }
  // sharply saturating benefit on a forest: welfare max sinks toward the
  // independent domination target
  Graph f = make_path(5);
  auto es = enumerate_pieces(f, rat(1));
  double prev_err = 1e18;
  for (double sigma : {0.1, 0.01, 0.001}) {
    double k = solve_k_for_sigma(sigma, f.n(), rat(1));
    auto bf = make_benefit(rat(1), rat(1), rat(1), k, f.n());
    auto fw = max_welfare(es, f, bf);
    auto lt = limit_targets(f, bf);
    REQUIRE(lt.low_concavity_welfare.has_value());
    double err = std::abs(fw.value - *lt.low_concavity_welfare);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-2);
}
