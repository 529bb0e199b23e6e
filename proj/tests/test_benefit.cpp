#include <doctest.h>

#include <cmath>

#include "pgg/benefit.hpp"
#include "pgg/generators.hpp"
#include "pgg/graph.hpp"

using namespace pgg;

TEST_CASE("benefit values at the kink parameters") {
  auto bf = make_benefit(rat(2), rat(3), rat(1), 0.7, 4);
  CHECK(bf.value(1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(bf.derivative(1.0) == doctest::Approx(3.0).epsilon(1e-15));
  // closed form away from e*
  double y = 2.5;
  double expect = 2.0 + (3.0 / 0.7) * (1.0 - std::exp(-0.7 * (y - 1.0)));
  CHECK(bf.value(y) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(bf.derivative(y) ==
        doctest::Approx(3.0 * std::exp(-0.7 * 1.5)).epsilon(1e-15));
  CHECK(bf.value_at_estar() == doctest::Approx(2.0));
}

TEST_CASE("benefit is increasing and strictly concave") {
  auto bf = make_benefit(rat(1), rat(1), rat(1), 2.0, 5);
  double prev_v = bf.value(0.0);
  double prev_d = bf.derivative(0.0);
  for (double y = 0.25; y <= 6.0; y += 0.25) {
    double v = bf.value(y);
    double d = bf.derivative(y);
    CHECK(v > prev_v);
    CHECK(d < prev_d);
    CHECK(d > 0);
    prev_v = v;
    prev_d = d;
  }
  // derivative matches a central difference
  for (double y : {0.3, 1.0, 2.7}) {
    double h = 1e-6;
    double fd = (bf.value(y + h) - bf.value(y - h)) / (2 * h);
    CHECK(bf.derivative(y) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(make_benefit(rat(1), rat(0), rat(1), 1.0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_benefit(rat(1), rat(1), rat(-1), 1.0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_benefit(rat(1), rat(1), rat(1), 0.0, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_benefit(rat(1), rat(1), rat(1), 1.0, 1),
                  std::invalid_argument);
}

TEST_CASE("concavity index pins") {
  // n = 2, e* = 1, k = ln 2: secant over [1,2] is (1 - 1/2)/ln 2
  auto bf = make_benefit(rat(1), rat(1), rat(1), std::log(2.0), 2);
  CHECK(concavity(bf, 2) ==
        doctest::Approx(0.5 / std::log(2.0)).epsilon(1e-14));
  // decreasing in k
  double last = 1.0;
  for (double k : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    auto b = make_benefit(rat(1), rat(1), rat(1), k, 4);
    double s = concavity(b, 4);
    CHECK(s < last);
    CHECK(s > 0);
    CHECK(s < 1);
    last = s;
  }
  // limits
  auto tiny = make_benefit(rat(1), rat(1), rat(1), 1e-9, 4);
  CHECK(concavity(tiny, 4) == doctest::Approx(1.0).epsilon(1e-7));
  auto huge = make_benefit(rat(1), rat(1), rat(1), 1e3, 4);
  CHECK(concavity(huge, 4) == doctest::Approx(1.0 / 3000.0).epsilon(1e-9));
}

TEST_CASE("curvature solves back from the concavity index") {
  for (double sigma : {0.9999, 0.99, 0.9, 0.5, 0.1, 0.001}) {
    for (int n : {2, 5, 12}) {
      double k = solve_k_for_sigma(sigma, n, rat(1));
      auto bf = make_benefit(rat(1), rat(1), rat(1), k, n);
      CHECK(concavity(bf, n) == doctest::Approx(sigma).epsilon(1e-10));
    }
  }
  double k2 = solve_k_for_sigma(0.5 / std::log(2.0), 2, rat(1));
  CHECK(k2 == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  CHECK_THROWS_AS(solve_k_for_sigma(0.0, 4, rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_k_for_sigma(1.0, 4, rat(1)), std::invalid_argument);
}

TEST_CASE("welfare slope vectors on small graphs") {
  // single edge: both agents use the two-agent concavity index
  auto bf = make_benefit(rat(1), rat(1), rat(1), 1.0, 2);
  auto ws = welfare_slopes(make_path(2), bf);
  double sb = concavity(bf, 2);
  CHECK(ws.secant[0] == doctest::Approx(sb));
  CHECK(ws.lower[0] == doctest::Approx(2 * sb - 1));
  CHECK(ws.upper[0] == doctest::Approx(2 * sb - 1));  // tangent = secant here

  // four-cycle, degree 2 everywhere: secant over [e*, 2 e*]
  auto ws4 = welfare_slopes(make_cycle(4), bf);
  double s = 1.0 - std::exp(-1.0);  // (1 - e^{-k})/k at k = 1
  double tp = std::exp(-1.0);
  for (int j = 0; j < 4; ++j) {
    CHECK(ws4.secant[j] == doctest::Approx(s).epsilon(1e-14));
    CHECK(ws4.tangent[j] == doctest::Approx(tp).epsilon(1e-14));
    CHECK(ws4.lower[j] == doctest::Approx(3 * s - 1).epsilon(1e-13));
    CHECK(ws4.upper[j] == doctest::Approx(3 * tp - 1).epsilon(1e-13));
  }

  Graph lonely(2);
  CHECK_THROWS_AS(welfare_slopes(lonely, bf), std::invalid_argument);
}

TEST_CASE("slope ordering holds on random graphs") {
  SeededRng rng(17);
  for (int t = 0; t < 10; ++t) {
    Graph g = gen_connected(7, 0.3, rng);
    for (double k : {0.05, 1.0, 20.0}) {
      auto bf = make_benefit(rat(1), rat(1), rat(1), k, 7);
      auto ws = welfare_slopes(g, bf);
      for (int j = 0; j < 7; ++j) {
        CHECK(ws.tangent[j] > 0);
        CHECK(ws.tangent[j] <= ws.secant[j] + 1e-15);
        CHECK(ws.secant[j] <= 1.0);
        // tangent slopes sit below secant slopes coefficient by coefficient;
        // the upper welfare bound recovers its slack through a constant shift
        CHECK(ws.upper[j] <= ws.lower[j] + 1e-13);
      }
    }
  }
}

TEST_CASE("slope limits at extreme curvature") {
  Graph g = make_path(4);
  // nearly linear benefit: lower weights approach the degrees
  double err_prev = 1e9;
  for (double sigma : {0.9, 0.99, 0.999}) {
    double k = solve_k_for_sigma(sigma, 4, rat(1));
    auto bf = make_benefit(rat(1), rat(1), rat(1), k, 4);
    auto ws = welfare_slopes(g, bf);
    double err = 0;
    for (int j = 0; j < 4; ++j)
      err = std::max(err, std::abs(ws.lower[j] - g.degree(j)));
    CHECK(err < err_prev);
    err_prev = err;
  }
  CHECK(err_prev < 0.02);
  // extreme curvature: upper weights approach -1
  err_prev = 1e9;
  for (double sigma : {0.1, 0.01, 0.001}) {
    double k = solve_k_for_sigma(sigma, 4, rat(1));
    auto bf = make_benefit(rat(1), rat(1), rat(1), k, 4);
    auto ws = welfare_slopes(g, bf);
    double err = 0;
    for (int j = 0; j < 4; ++j)
      err = std::max(err, std::abs(ws.upper[j] + 1.0));
    CHECK(err < err_prev);
    err_prev = err;
  }
  CHECK(err_prev < 0.02);
}
