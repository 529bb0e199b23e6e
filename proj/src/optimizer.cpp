#include "pgg/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgg/indep_sets.hpp"

namespace pgg {

LinearOptimum max_linear(const EquilibriumSet& es, const RatVec& mu) {
  if (static_cast<int>(mu.size()) != es.n)
    throw std::invalid_argument("functional size mismatch");
  if (es.pieces.empty()) throw std::invalid_argument("empty equilibrium set");
  LinearOptimum out;
  bool first = true;
  for (size_t pi = 0; pi < es.pieces.size(); ++pi) {
    const EquilibriumPiece& piece = es.pieces[pi];
    bool piece_first = true;
    Rat piece_best;
    const RatVec* piece_witness = nullptr;
    for (const RatVec& v : piece.vertices) {
      Rat val = dot(mu, v);
      if (piece_first || val > piece_best) {
        piece_best = val;
        piece_witness = &v;  // vertices are lex sorted: first attaining wins
        piece_first = false;
      }
    }
    if (first || piece_best > out.value) {
      out.value = piece_best;
      out.witness = {*piece_witness, es.e_star};
      out.piece_index = static_cast<int>(pi);
      out.tie_pieces = 1;
      first = false;
    } else if (piece_best == out.value) {
      ++out.tie_pieces;
    }
  }
  return out;
}

LinearOptimum min_cost(const EquilibriumSet& es, const Rat& c) {
  if (c <= 0) throw std::invalid_argument("cost rate must be positive");
  RatVec minus_ones(es.n, Rat(-1));
  LinearOptimum out = max_linear(es, minus_ones);
  out.value = c * (-out.value);
  return out;
}

LinearOptimum max_weighted_effort(const EquilibriumSet& es, const RatVec& w) {
  for (const Rat& x : w)
    if (x < 0) throw std::invalid_argument("negative weight");
  return max_linear(es, w);
}

SpecializedExtrema specialized_extrema(const Graph& g, const Rat& e_star,
                                       const BenefitFunction& bf,
                                       const RatVec& w, const Rat& c) {
  std::vector<NodeSet> sets = enumerate_mis(g);
  if (sets.empty()) throw std::logic_error("no maximal independent sets");
  SpecializedExtrema out;
  bool first = true;
  for (const NodeSet& s : sets) {
    EffortProfile p = specialized_from_mis(g, e_star, s);
    double wf = welfare(bf, g, p);
    Rat eff = 0;
    for (int v : s.members) eff += w.at(v);
    eff *= e_star;
    Rat cs = c * e_star * rat(s.size());

    if (first || wf > out.max_welfare) {
      out.max_welfare = wf;
      out.max_welfare_witness = p;
    }
    if (first || eff > out.max_weighted_effort) {
      out.max_weighted_effort = eff;
      out.max_weighted_effort_witness = p;
      out.max_weighted_effort_ties = 1;
    } else if (eff == out.max_weighted_effort) {
      ++out.max_weighted_effort_ties;
    }
    if (first || cs < out.min_cost) {
      out.min_cost = cs;
      out.min_cost_witness = p;
      out.min_cost_ties = 1;
    } else if (cs == out.min_cost) {
      ++out.min_cost_ties;
    }
    first = false;
  }
  return out;
}

namespace {

struct WelfareEval {
  const Graph& g;
  const BenefitFunction& bf;
  double c;

  double value(const std::vector<double>& x) const {
    int n = g.n();
    std::vector<double> scn(x);
    for (auto [u, v] : g.edges()) {
      scn[u] += x[v];
      scn[v] += x[u];
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += bf.value(scn[i]) - c * x[i];
    return total;
  }

  std::vector<double> gradient(const std::vector<double>& x) const {
    int n = g.n();
    std::vector<double> scn(x);
    for (auto [u, v] : g.edges()) {
      scn[u] += x[v];
      scn[v] += x[u];
    }
    std::vector<double> db(n);
    for (int i = 0; i < n; ++i) db[i] = bf.derivative(scn[i]);
    std::vector<double> grad(db);  // own term
    for (auto [u, v] : g.edges()) {
      grad[u] += db[v];
      grad[v] += db[u];
    }
    for (int i = 0; i < n; ++i) grad[i] -= c;
    return grad;
  }
};

double dot_d(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

WelfareOptimum max_welfare(const EquilibriumSet& es, const Graph& g,
                           const BenefitFunction& bf, double gap_tol,
                           int max_iter) {
  if (es.n != g.n()) throw std::invalid_argument("set does not match graph");
  if (es.pieces.empty()) throw std::invalid_argument("empty equilibrium set");
  WelfareEval eval{g, bf, rat_to_double(bf.c)};
  WelfareOptimum out;
  bool first = true;
  for (size_t pi = 0; pi < es.pieces.size(); ++pi) {
    const EquilibriumPiece& piece = es.pieces[pi];
    std::vector<std::vector<double>> verts;
    for (const RatVec& v : piece.vertices) {
      std::vector<double> vd(v.size());
      for (size_t j = 0; j < v.size(); ++j) vd[j] = rat_to_double(v[j]);
      verts.push_back(std::move(vd));
    }
    // start from the best vertex; a zero-dimensional piece is done already
    double best_val = eval.value(verts[0]);
    size_t best_idx = 0;
    for (size_t j = 1; j < verts.size(); ++j) {
      double val = eval.value(verts[j]);
      if (val > best_val) {
        best_val = val;
        best_idx = j;
      }
    }
    std::vector<double> x = verts[best_idx];
    double piece_gap = 0.0;
    int used = 0;
    if (verts.size() > 1) {
      for (used = 0; used < max_iter; ++used) {
        std::vector<double> grad = eval.gradient(x);
        size_t s_idx = 0;
        double s_val = dot_d(grad, verts[0]);
        for (size_t j = 1; j < verts.size(); ++j) {
          double val = dot_d(grad, verts[j]);
          if (val > s_val) {
            s_val = val;
            s_idx = j;
          }
        }
        piece_gap = s_val - dot_d(grad, x);
        if (piece_gap <= gap_tol) break;
        std::vector<double> dir(x.size());
        for (size_t j = 0; j < x.size(); ++j) dir[j] = verts[s_idx][j] - x[j];
        // exact line search: the directional derivative is decreasing
        auto slope = [&](double t) {
          std::vector<double> y(x.size());
          for (size_t j = 0; j < x.size(); ++j) y[j] = x[j] + t * dir[j];
          return dot_d(eval.gradient(y), dir);
        };
        double step;
        if (slope(1.0) >= 0) {
          step = 1.0;
        } else {
          double lo = 0.0, hi = 1.0;
          for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            if (slope(mid) > 0)
              lo = mid;
            else
              hi = mid;
          }
          step = 0.5 * (lo + hi);
        }
        for (size_t j = 0; j < x.size(); ++j) x[j] += step * dir[j];
      }
    }
    double fx = eval.value(x);
    if (fx < best_val) {  // never fall below the best vertex
      fx = best_val;
      x = verts[best_idx];
    }
    if (piece_gap > out.gap) out.gap = piece_gap;
    if (piece_gap > gap_tol) out.converged = false;
    out.iterations = std::max(out.iterations, used);
    if (first || fx > out.value) {
      out.value = fx;
      out.witness = x;
      out.piece_index = static_cast<int>(pi);
      first = false;
    }
  }
  return out;
}

DistributedExtrema distributed_extrema(const EquilibriumSet& es,
                                       const Graph& /*g*/,
                                       const BenefitFunction& bf,
                                       const Rat& c) {
  DistributedExtrema out;
  std::optional<EquilibriumPiece> piece = distributed_piece(es);
  if (!piece) return out;
  out.exists = true;
  // every point of the full-support piece has all neighborhoods tight, so
  // welfare reduces to n b(e*) minus cost: its infimum sits at max effort
  bool first = true;
  Rat max_eff, min_eff;
  const RatVec *max_w = nullptr, *min_w = nullptr;
  for (const RatVec& v : piece->vertices) {
    Rat total = vec_sum(v);
    if (first || total > max_eff) {
      max_eff = total;
      max_w = &v;
    }
    if (first || total < min_eff) {
      min_eff = total;
      min_w = &v;
    }
    first = false;
  }
  auto has_zero = [](const RatVec& v) {
    for (const Rat& q : v)
      if (q == 0) return true;
    return false;
  };
  out.min_welfare = es.n * bf.value_at_estar() - rat_to_double(c * max_eff);
  out.min_welfare_witness = {*max_w, es.e_star};
  out.min_welfare_closure = has_zero(*max_w);
  out.min_cost = c * min_eff;
  out.min_cost_witness = {*min_w, es.e_star};
  out.min_cost_closure = has_zero(*min_w);
  return out;
}

WelfareBounds welfare_bounds(const BenefitFunction& bf, const Graph& g,
                             const EffortProfile& p) {
  WelfareSlopes s = welfare_slopes(g, bf);
  int n = g.n();
  double c = rat_to_double(bf.c);
  double es = rat_to_double(bf.e_star);
  double base = n * bf.value_at_estar();
  double sum_secant = 0, weighted_gap = 0;
  for (int j = 0; j < n; ++j) {
    sum_secant += s.secant[j];
    weighted_gap += g.degree(j) * (s.secant[j] - s.tangent[j]);
  }
  double lx = 0, ux = 0;
  for (int j = 0; j < n; ++j) {
    double xj = rat_to_double(p.x[j]);
    lx += s.lower[j] * xj;
    ux += s.upper[j] * xj;
  }
  WelfareBounds out;
  out.lower = c * lx + base - c * es * sum_secant;
  out.upper = c * ux + base - c * es * sum_secant + c * es * weighted_gap;
  return out;
}

LimitTargets limit_targets(const Graph& g, const BenefitFunction& bf) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("limit targets need no isolated vertices");
  LimitTargets out;
  RatVec deg_w;
  for (int d : g.degrees()) deg_w.push_back(rat(d));
  WeightedIndependence wi = weighted_independence(g, deg_w);
  double b0 = bf.value_at_estar();
  double ces = rat_to_double(bf.c * bf.e_star);
  out.high_concavity_welfare =
      g.n() * (b0 - ces) + ces * rat_to_double(wi.weight);
  out.high_witness = wi.witness;
  if (is_forest(g)) {
    std::vector<NodeSet> sets = enumerate_mis(g);
    const NodeSet* best = nullptr;
    for (const NodeSet& s : sets)
      if (!best || s.size() < best->size()) best = &s;  // lex order on ties
    out.low_concavity_welfare = g.n() * b0 - ces * best->size();
    out.low_witness = *best;
  }
  return out;
}

}  // namespace pgg
