#include "pgg/benefit.hpp"

#include <cmath>
#include <stdexcept>

namespace pgg {

namespace {

// (1 - exp(-t)) / t, stable near t = 0
double secant_ratio(double t) { return -std::expm1(-t) / t; }

}  // namespace

double BenefitFunction::value(double y) const {
  double cd = rat_to_double(c);
  double shift = y - rat_to_double(e_star);
  return rat_to_double(b0) + (cd / k) * (-std::expm1(-k * shift));
}

double BenefitFunction::derivative(double y) const {
  double shift = y - rat_to_double(e_star);
  return rat_to_double(c) * std::exp(-k * shift);
}

BenefitFunction make_benefit(const Rat& b0, const Rat& c, const Rat& e_star,
                             double k, int n_ref) {
  if (c <= 0) throw std::invalid_argument("marginal cost must be positive");
  if (e_star <= 0) throw std::invalid_argument("e_star must be positive");
  if (!(k > 0)) throw std::invalid_argument("curvature must be positive");
  if (n_ref < 2) throw std::invalid_argument("n_ref must be at least 2");
  return BenefitFunction{b0, c, e_star, k, n_ref};
}

double concavity(const BenefitFunction& bf, int n) {
  if (n < 2) throw std::invalid_argument("concavity needs n >= 2");
  double t = bf.k * (n - 1) * rat_to_double(bf.e_star);
  return secant_ratio(t);
}

double solve_k_for_sigma(double sigma, int n, const Rat& e_star) {
  if (!(sigma > 0.0) || !(sigma < 1.0))
    throw std::invalid_argument("target concavity must lie in (0,1)");
  if (n < 2) throw std::invalid_argument("solve_k_for_sigma needs n >= 2");
  double span = (n - 1) * rat_to_double(e_star);
  auto f = [&](double k) { return secant_ratio(k * span); };
  double lo = 1e-12, hi = 1.0;
  while (f(lo) < sigma) lo *= 0.5;
  while (f(hi) > sigma) hi *= 2.0;
  for (int it = 0; it < 400; ++it) {
    double mid = 0.5 * (lo + hi);
    double v = f(mid);
    if (std::abs(v - sigma) <= 1e-12) return mid;
    if (v > sigma)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

WelfareSlopes welfare_slopes(const Graph& g, const BenefitFunction& bf) {
  int n = g.n();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("welfare slopes need no isolated vertices");
  double sigma_b = concavity(bf, n);
  double es = rat_to_double(bf.e_star);
  WelfareSlopes s;
  s.secant.resize(n);
  s.tangent.resize(n);
  for (int j = 0; j < n; ++j) {
    int d = g.degree(j);
    if (d > 1) {
      double t = bf.k * (d - 1) * es;
      s.secant[j] = secant_ratio(t);
      s.tangent[j] = std::exp(-t);
    } else {
      s.secant[j] = sigma_b;
      s.tangent[j] = sigma_b;
    }
  }
  s.lower.resize(n);
  s.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    double l = s.secant[j] - 1.0;
    double u = s.tangent[j] - 1.0;
    for (int i : g.neighbors(j)) {
      l += s.secant[i];
      u += s.tangent[i];
    }
    s.lower[j] = l;
    s.upper[j] = u;
  }
  return s;
}

}  // namespace pgg
