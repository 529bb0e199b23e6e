#pragma once

#include "pgg/graph.hpp"
#include "pgg/rational.hpp"

namespace pgg {

// Strictly increasing, strictly concave benefit with marginal benefit equal
// to marginal cost exactly at e*:
//   b(y) = b0 + (c/k) * (1 - exp(-k * (y - e*)))
// k > 0 tunes curvature: k -> 0 approaches the linear benefit with slope c,
// large k saturates immediately past e*.
struct BenefitFunction {
  Rat b0;
  Rat c;
  Rat e_star;
  double k = 1.0;
  int n_ref = 2;  // vertex count the concavity index refers to

  double value(double y) const;
  double derivative(double y) const;
  double value_at_estar() const { return rat_to_double(b0); }
};

BenefitFunction make_benefit(const Rat& b0, const Rat& c, const Rat& e_star,
                             double k, int n_ref);

// Concavity index in (0,1): secant slope of b over [e*, n e*] divided by c.
// Decreasing in k. Requires n >= 2.
double concavity(const BenefitFunction& bf, int n);

// Inverse of concavity in k by bisection; reproduces the target within 1e-10.
double solve_k_for_sigma(double sigma, int n, const Rat& e_star);

// Per-agent slope data for the linear welfare sandwich. For degree d_j > 1,
// secant[j] is the slope of b over [e*, d_j e*] divided by c and tangent[j]
// is b'(d_j e*)/c; degree-1 agents use the concavity index for both. Then
//   lower[j] = secant[j] + sum over neighbors of secant - 1
//   upper[j] = tangent[j] + sum over neighbors of tangent - 1
// Rejects graphs with isolated vertices.
struct WelfareSlopes {
  std::vector<double> secant;
  std::vector<double> tangent;
  std::vector<double> lower;
  std::vector<double> upper;
};

WelfareSlopes welfare_slopes(const Graph& g, const BenefitFunction& bf);

}  // namespace pgg
