#include "pgg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pgg/benefit.hpp"
#include "pgg/equilibria.hpp"
#include "pgg/generators.hpp"
#include "pgg/graph.hpp"
#include "pgg/indep_sets.hpp"
#include "pgg/metrics.hpp"
#include "pgg/optimizer.hpp"

namespace pgg {
namespace {

// One seeded game instance plus its lazily enumerated equilibrium set. The
// piece cache matters: the structure battery re-walks every family.
struct Instance {
  Graph g;
  Rat e_star;
  Rat c;
  std::string tag;
  std::optional<EquilibriumSet> cached;

  const EquilibriumSet& pieces() {
    if (!cached) cached = enumerate_pieces(g, e_star);
    return *cached;
  }
};

std::string fp(double v) {
  std::ostringstream os;
  os << std::setprecision(4) << v;
  return os.str();
}

std::string vec_key(const RatVec& v) {
  std::string s;
  for (const Rat& q : v) {
    s += rat_to_string(q);
    s += ',';
  }
  return s;
}

bool zero_estar_profile(const RatVec& x, const Rat& e_star) {
  for (const Rat& v : x)
    if (v != 0 && v != e_star) return false;
  return true;
}

uint64_t positive_mask(const RatVec& x) {
  uint64_t m = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) m |= uint64_t{1} << i;
  return m;
}

bool has_isolated(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

BenefitFunction bf_for(const Instance& inst, double k) {
  return make_benefit(inst.c * inst.e_star, inst.c, inst.e_star, k,
                      std::max(2, inst.g.n()));
}

// --- instance families (fixed seeds, so every run sees the same graphs) ----

std::vector<Instance> build_grid_family() {
  std::vector<Instance> out;
  SeededRng rng(101);
  const Rat stars[3] = {rat(1), rat(1, 2), rat(3, 2)};
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 7;
    Graph g;
    switch (i % 5) {
      case 0: g = gen_gnp(n, 0.3, rng); break;
      case 1: g = gen_gnp(n, 0.55, rng); break;
      case 2: g = gen_gnp(n, 0.8, rng); break;
      case 3: g = gen_tree(n, rng); break;
      default: g = gen_forest(n, 0.6, rng); break;
    }
    out.push_back({std::move(g), stars[i % 3], rat(1),
                   "grid#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_weighted_family() {
  std::vector<Instance> out;
  SeededRng rng(202);
  const Rat stars[3] = {rat(1), rat(3, 2), rat(2, 3)};
  const double ps[5] = {0.2, 0.35, 0.5, 0.65, 0.8};
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 11;
    Graph g;
    if (i % 7 == 3)
      g = gen_tree(n, rng);
    else if (i % 9 == 4)
      g = gen_forest(n, 0.7, rng);
    else
      g = gen_gnp(n, ps[i % 5], rng);
    out.push_back({std::move(g), stars[i % 3], rat(1),
                   "weighted#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_forest_family() {
  std::vector<Instance> out;
  SeededRng rng(303);
  const Rat costs[3] = {rat(1), rat(2), rat(5, 3)};
  const Rat stars[2] = {rat(1), rat(1, 2)};
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 13;
    Graph g = (i % 5 == 2) ? gen_tree(n, rng)
                           : gen_forest(n, i % 2 ? 0.85 : 0.6, rng);
    out.push_back({std::move(g), stars[i % 2], costs[i % 3],
                   "forest#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_regular_family() {
  std::vector<Instance> out;
  for (int n = 3; n <= 10; ++n)
    out.push_back({make_cycle(n), rat(1), rat(1),
                   "cycle" + std::to_string(n), {}});
  out.push_back({make_cube(), rat(1), rat(1), "cube", {}});
  return out;
}

std::vector<Instance> build_connected_family() {
  std::vector<Instance> out;
  SeededRng rng(404);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 9;
    out.push_back({gen_connected(n, 0.25, rng), rat(1), rat(1),
                   "connected#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_small_forest_family() {
  std::vector<Instance> out;
  SeededRng rng(505);
  for (int i = 0; i < 20; ++i) {
    const int n = 3 + i % 10;
    out.push_back({gen_forest(n, i % 2 ? 0.85 : 0.65, rng), rat(1), rat(1),
                   "lowforest#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_covered_family() {
  std::vector<Instance> out;
  SeededRng rng(606);
  for (int i = 0; i < 20; ++i) {
    const int pairs = 2 + i % 7;
    out.push_back({gen_well_covered_forest(pairs, rng), rat(1), rat(1),
                   "covered#" + std::to_string(i), {}});
  }
  return out;
}

std::vector<Instance> build_pendant_family() {
  std::vector<Instance> out;
  out.push_back({make_path(4), rat(1), rat(1), "path4", {}});
  out.push_back({make_path(5), rat(1), rat(1), "path5", {}});
  out.push_back({make_path(6), rat(1), rat(1), "path6", {}});
  Graph spider(5);
  spider.add_edge(0, 1);
  spider.add_edge(1, 2);
  spider.add_edge(0, 3);
  spider.add_edge(3, 4);
  out.push_back({std::move(spider), rat(1), rat(1), "spider", {}});
  SeededRng rng(707);
  for (int i = 0; i < 4; ++i)
    out.push_back({gen_tree(5 + i, rng), rat(1), rat(1),
                   "pendant-tree#" + std::to_string(i), {}});
  return out;
}

class Workspace {
 public:
  std::vector<Instance>& grid_family() { return get(grid_, build_grid_family); }
  std::vector<Instance>& weighted_family() {
    return get(weighted_, build_weighted_family);
  }
  std::vector<Instance>& forest_family() {
    return get(forest_, build_forest_family);
  }
  std::vector<Instance>& regular_family() {
    return get(regular_, build_regular_family);
  }
  std::vector<Instance>& connected_family() {
    return get(connected_, build_connected_family);
  }
  std::vector<Instance>& small_forest_family() {
    return get(small_forest_, build_small_forest_family);
  }
  std::vector<Instance>& covered_family() {
    return get(covered_, build_covered_family);
  }
  std::vector<Instance>& pendant_family() {
    return get(pendant_, build_pendant_family);
  }

 private:
  using Slot = std::optional<std::vector<Instance>>;
  static std::vector<Instance>& get(Slot& slot, std::vector<Instance> (*f)()) {
    if (!slot) slot = f();
    return *slot;
  }
  Slot grid_, weighted_, forest_, regular_, connected_, small_forest_,
      covered_, pendant_;
};

CriterionResult make_row(int id, bool ok, std::string detail) {
  return {id, criterion_names()[id], ok, std::move(detail)};
}

// --- criterion 1: exhaustive grid scan vs piece coverage --------------------

struct ScanOutcome {
  long points = 0;
  long equilibria = 0;
  int spot_checks = 0;
  std::string failure;
};

// Walks the full lattice x in {0..denom}^n (efforts in units of e*/denom),
// maintaining neighborhood sums incrementally. For every point, the direct
// equilibrium test (coverage plus complementarity, in integer units) must
// agree with membership in some enumerated piece; a sprinkling of points is
// re-verified through the exact rational interfaces.
ScanOutcome scan_grid(Instance& inst, int denom) {
  const Graph& g = inst.g;
  const int n = g.n();
  const EquilibriumSet& es = inst.pieces();
  std::vector<uint64_t> supports;
  supports.reserve(es.pieces.size());
  for (const auto& pc : es.pieces) supports.push_back(pc.support.mask);
  const uint64_t all = g.all_mask();
  std::vector<uint64_t> closed(n);
  for (int v = 0; v < n; ++v)
    closed[v] = g.neighbor_mask(v) | (uint64_t{1} << v);

  std::vector<int> x(n, 0), scn(n, 0);
  ScanOutcome out;
  while (true) {
    ++out.points;
    uint64_t pos = 0, tight = 0, ok = 0;
    for (int i = 0; i < n; ++i) {
      if (x[i] > 0) pos |= uint64_t{1} << i;
      if (scn[i] == denom) tight |= uint64_t{1} << i;
      if (scn[i] >= denom) ok |= uint64_t{1} << i;
    }
    const bool eq = (ok == all) && ((pos & ~tight) == 0);
    bool covered = false;
    size_t hit = 0;
    for (size_t s = 0; s < supports.size(); ++s) {
      const uint64_t S = supports[s];
      if ((pos & ~S) == 0 && (S & ~tight) == 0 && ((all & ~S) & ~ok) == 0) {
        covered = true;
        hit = s;
        break;
      }
    }
    if (eq != covered) {
      std::ostringstream os;
      os << inst.tag << ": grid point (";
      for (int i = 0; i < n; ++i) os << (i ? "," : "") << x[i];
      os << ")/" << denom
         << (eq ? " is an equilibrium no piece covers"
                : " is covered by a piece but fails the equilibrium test");
      out.failure = os.str();
      return out;
    }
    if (eq) {
      ++out.equilibria;
      if (out.equilibria % 41 == 1 && out.spot_checks < 40) {
        RatVec xr(n);
        for (int i = 0; i < n; ++i) xr[i] = rat(x[i]) * inst.e_star / denom;
        EffortProfile p{xr, inst.e_star};
        if (!check_equilibrium(g, p).ok ||
            !es.pieces[hit].contains(g, inst.e_star, xr)) {
          out.failure =
              inst.tag + ": exact spot check disagreed with the grid scan";
          return out;
        }
        ++out.spot_checks;
      }
    }
    int carry = 0;
    while (carry < n && x[carry] == denom) ++carry;
    if (carry == n) break;
    for (int q = 0; q < carry; ++q) {
      x[q] = 0;
      for (int u = 0; u < n; ++u)
        if ((closed[q] >> u) & 1) scn[u] -= denom;
    }
    x[carry] += 1;
    for (int u = 0; u < n; ++u)
      if ((closed[carry] >> u) & 1) scn[u] += 1;
  }
  return out;
}

CriterionResult crit1(Workspace& ws) {
  long points = 0, equilibria = 0;
  int spots = 0;
  for (auto& inst : ws.grid_family()) {
    ScanOutcome s = scan_grid(inst, 8);
    if (!s.failure.empty()) return make_row(1, false, s.failure);
    points += s.points;
    equilibria += s.equilibria;
    spots += s.spot_checks;
  }
  std::ostringstream os;
  os << "50 graphs, " << points << " lattice points at step e*/8, "
     << equilibria << " equilibria; coverage agreed pointwise, " << spots
     << " exact spot checks";
  return make_row(1, true, os.str());
}

// --- criterion 2: 0/e* points are the maximal independent sets --------------

CriterionResult crit2(Workspace& ws) {
  long profiles = 0;
  for (auto& inst : ws.grid_family()) {
    std::set<std::string> mis_side, vertex_side;
    for (const NodeSet& s : enumerate_mis(inst.g)) {
      RatVec x(inst.g.n(), rat(0));
      for (int v : s.members) x[v] = inst.e_star;
      mis_side.insert(vec_key(x));
    }
    for (const auto& pc : inst.pieces().pieces)
      for (const RatVec& v : pc.vertices)
        if (zero_estar_profile(v, inst.e_star)) vertex_side.insert(vec_key(v));
    if (mis_side != vertex_side) {
      std::ostringstream os;
      os << inst.tag << ": " << mis_side.size()
         << " maximal independent sets vs " << vertex_side.size()
         << " distinct 0/e* vertices";
      return make_row(2, false, os.str());
    }
    profiles += static_cast<long>(mis_side.size());
  }
  return make_row(2, true,
                  "50 graphs, " + std::to_string(profiles) +
                      " specialized profiles matched the maximal independent "
                      "sets exactly");
}

// --- criterion 3: weighted effort vs weighted independence ------------------

CriterionResult crit3(Workspace& ws) {
  SeededRng rng(909);
  for (auto& inst : ws.weighted_family()) {
    const Graph& g = inst.g;
    RatVec w(g.n());
    for (Rat& wi : w) wi = rng.chance(0.15) ? rat(0) : rng.small_rat(6, 4);
    auto best = weighted_independence(g, w);
    const Rat target = inst.e_star * best.weight;
    auto lin = max_weighted_effort(inst.pieces(), w);
    if (lin.value != target)
      return make_row(3, false,
                      inst.tag + ": equilibrium optimum " +
                          rat_to_string(lin.value) + " != e* alpha_w = " +
                          rat_to_string(target));
    auto spec = specialized_extrema(g, inst.e_star, bf_for(inst, 1.0), w,
                                    inst.c);
    if (spec.max_weighted_effort != target)
      return make_row(3, false,
                      inst.tag + ": specialized optimum " +
                          rat_to_string(spec.max_weighted_effort) +
                          " != e* alpha_w = " + rat_to_string(target));
    if (!check_equilibrium(g, lin.witness).ok)
      return make_row(3, false, inst.tag + ": witness is not an equilibrium");
    if (weighted_effort(w, lin.witness) != target)
      return make_row(3, false, inst.tag + ": witness misses the optimum");
    EffortProfile from_mis = specialized_from_mis(g, inst.e_star, best.witness);
    if (weighted_effort(w, from_mis) != target)
      return make_row(3, false,
                      inst.tag + ": max-weight set does not attain the bound");
  }
  return make_row(3, true,
                  "50 graphs with random rational weights: equilibrium and "
                  "specialized optima both equal e* alpha_w exactly");
}

// --- criterion 4: forest minimum cost --------------------------------------

CriterionResult crit4(Workspace& ws) {
  for (auto& inst : ws.forest_family()) {
    const Graph& g = inst.g;
    const int beta = independent_domination_number(g);
    const Rat target = inst.c * inst.e_star * beta;
    auto mc = min_cost(inst.pieces(), inst.c);
    if (mc.value != target)
      return make_row(4, false,
                      inst.tag + ": minimum cost " + rat_to_string(mc.value) +
                          " != c e* beta = " + rat_to_string(target));
    RatVec ones(g.n(), rat(1));
    auto spec = specialized_extrema(g, inst.e_star, bf_for(inst, 1.0), ones,
                                    inst.c);
    if (spec.min_cost != target)
      return make_row(4, false,
                      inst.tag + ": specialized minimum " +
                          rat_to_string(spec.min_cost) + " != " +
                          rat_to_string(target));
    if (!check_equilibrium(g, mc.witness).ok ||
        cost(inst.c, mc.witness) != target)
      return make_row(4, false, inst.tag + ": cost witness is off");
    const uint64_t sup = positive_mask(spec.min_cost_witness.x);
    NodeSet s = NodeSet::from_mask(sup, g.n());
    if (s.size() != beta || !is_independent(g, sup) || !is_dominating(g, sup))
      return make_row(4, false,
                      inst.tag + ": witness is not a smallest maximal "
                                 "independent set");
  }
  // the forest hypothesis is needed: on the 4-cycle the distributed segment
  // undercuts every specialized equilibrium
  Instance control{make_cycle(4), rat(1), rat(1), "cycle4-control", {}};
  auto mc = min_cost(control.pieces(), control.c);
  RatVec ones(4, rat(1));
  auto spec = specialized_extrema(control.g, control.e_star,
                                  bf_for(control, 1.0), ones, control.c);
  if (!(mc.value == rat(4, 3) && spec.min_cost == rat(2) &&
        mc.value < spec.min_cost))
    return make_row(4, false,
                    "cycle4 control: expected strict gap 4/3 < 2, got " +
                        rat_to_string(mc.value) + " vs " +
                        rat_to_string(spec.min_cost));
  return make_row(4, true,
                  "50 forests: minimum cost = specialized minimum = c e* beta "
                  "with a smallest-MIS witness; cycle4 control keeps the gap "
                  "strict (4/3 < 2)");
}

// --- criterion 5: regular graphs, uniform distributed witness ---------------

CriterionResult crit5(Workspace& ws) {
  for (auto& inst : ws.regular_family()) {
    const Graph& g = inst.g;
    const int d = *regular_degree(g);
    const Rat target = inst.c * inst.e_star * rat(g.n(), d + 1);
    auto mc = min_cost(inst.pieces(), inst.c);
    if (mc.value != target)
      return make_row(5, false,
                      inst.tag + ": minimum cost " + rat_to_string(mc.value) +
                          " != c e* n/(d+1) = " + rat_to_string(target));
    auto dx = distributed_extrema(inst.pieces(), g, bf_for(inst, 1.0), inst.c);
    if (!dx.exists || dx.min_cost != target)
      return make_row(5, false,
                      inst.tag + ": distributed minimum is not the same");
    EffortProfile uniform{RatVec(g.n(), inst.e_star / (d + 1)), inst.e_star};
    if (!check_equilibrium(g, uniform).ok ||
        cost(inst.c, uniform) != target)
      return make_row(5, false,
                      inst.tag + ": uniform profile fails to attain it");
    auto dp = distributed_piece(inst.pieces());
    if (!dp || !dp->contains(g, inst.e_star, uniform.x))
      return make_row(5, false,
                      inst.tag + ": uniform profile not inside the "
                                 "distributed piece");
  }
  return make_row(5, true,
                  "cycles C3..C10 and the cube: minimum cost = distributed "
                  "minimum = c e* n/(d+1), attained by the uniform profile");
}

// --- criterion 6: near-linear benefit limit ---------------------------------

CriterionResult crit6(Workspace& ws) {
  const double sigmas[4] = {0.9, 0.99, 0.999, 0.9999};
  double worst_gap = 0, worst_err = 0;
  for (auto& inst : ws.connected_family()) {
    const Graph& g = inst.g;
    const int n = g.n();
    auto lt = limit_targets(g, bf_for(inst, 1.0));
    EffortProfile xs = specialized_from_mis(g, inst.e_star, lt.high_witness);
    const double scale = rat_to_double(inst.c * inst.e_star) * n;
    const double budget = 1e-3 * scale;
    double prev = std::numeric_limits<double>::infinity();
    double gap = 0, opt_err = 0, spec_err = 0;
    for (double sigma : sigmas) {
      const double k = solve_k_for_sigma(sigma, n, inst.e_star);
      BenefitFunction bf = bf_for(inst, k);
      auto wm = max_welfare(inst.pieces(), g, bf);
      if (!wm.converged)
        return make_row(6, false, inst.tag + ": welfare search stalled");
      const double ws_val = welfare(bf, g, xs);
      gap = std::abs(wm.value - ws_val);
      if (gap > prev + 1e-9 * scale)
        return make_row(6, false,
                        inst.tag + ": gap grew from " + fp(prev) + " to " +
                            fp(gap) + " at sigma " + fp(sigma));
      prev = gap;
      opt_err = std::abs(wm.value - lt.high_concavity_welfare);
      spec_err = std::abs(ws_val - lt.high_concavity_welfare);
    }
    if (gap > budget || opt_err > budget || spec_err > budget)
      return make_row(6, false,
                      inst.tag + ": at sigma 0.9999 gap " + fp(gap) +
                          ", optimum error " + fp(opt_err) +
                          ", specialized error " + fp(spec_err) +
                          " vs budget " + fp(budget));
    worst_gap = std::max(worst_gap, gap / budget);
    worst_err = std::max(worst_err, std::max(opt_err, spec_err) / budget);
  }
  return make_row(6, true,
                  "20 connected graphs, sigma 0.9 to 0.9999: gap to the "
                  "degree-weighted specialized profile shrank monotonically; "
                  "worst final gap " + fp(worst_gap) +
                      " and worst limit error " + fp(worst_err) +
                      " of the 1e-3 c e* n budget");
}

// --- criterion 7: plateau benefit limit on forests ---------------------------

CriterionResult crit7(Workspace& ws) {
  const double sigmas[3] = {0.1, 0.01, 0.001};
  // The residual at curvature k is s(1-e^{-k e*})/k where s counts free
  // riders whose neighborhoods sit strictly above e* at the best
  // minimum-cost equilibrium, so the fixed budget is only reachable when
  // s <= 1; forests drawing s = 2 land near 1.8x of it. They are reported
  // here, not absorbed into a wider tolerance.
  double worst = 0;
  int over = 0, total = 0;
  std::string first_over;
  for (auto& inst : ws.small_forest_family()) {
    const Graph& g = inst.g;
    const int n = g.n();
    const int beta = independent_domination_number(g);
    const double ce = rat_to_double(inst.c * inst.e_star);
    const double target = n * rat_to_double(bf_for(inst, 1.0).b0) - ce * beta;
    const double scale = ce * n;
    const double budget = 1e-3 * scale;
    double prev = std::numeric_limits<double>::infinity();
    double err = 0;
    for (double sigma : sigmas) {
      const double k = solve_k_for_sigma(sigma, n, inst.e_star);
      BenefitFunction bf = bf_for(inst, k);
      auto wm = max_welfare(inst.pieces(), g, bf);
      if (!wm.converged)
        return make_row(7, false, inst.tag + ": welfare search stalled");
      err = std::abs(wm.value - target);
      if (err > prev + 1e-9 * scale)
        return make_row(7, false,
                        inst.tag + ": error grew from " + fp(prev) + " to " +
                            fp(err) + " at sigma " + fp(sigma));
      prev = err;
    }
    ++total;
    worst = std::max(worst, err / budget);
    if (err > budget) {
      ++over;
      if (first_over.empty())
        first_over = inst.tag + ": final error " + fp(err) + " vs budget " +
                     fp(budget) + " (n " + std::to_string(n) + ", beta " +
                     std::to_string(beta) + ")";
    }
  }
  if (over > 0)
    return make_row(7, false,
                    std::to_string(over) + " of " + std::to_string(total) +
                        " forests exceed the 1e-3 c e* n budget at sigma "
                        "0.001 (worst " + fp(worst) + "x); errors decrease "
                        "along the sweep and match s(1-e^{-k e*})/k with s "
                        "saturated free riders, s = 2 on the offenders; "
                        "first: " + first_over);
  return make_row(7, true,
                  "20 forests, sigma 0.1 to 0.001: optimum welfare fell to "
                  "n b(e*) - c e* beta; worst final error " + fp(worst) +
                      " of the 1e-3 c e* n budget");
}

// --- criterion 8: linear welfare sandwich ------------------------------------

CriterionResult crit8(Workspace& ws) {
  const double curvatures[3] = {1e-2, 1.0, 1e2};
  long samples = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  auto feed = [&](std::vector<Instance>& family) {
    for (auto& inst : family) {
      if (samples >= 1000) return;
      const Graph& g = inst.g;
      if (has_isolated(g)) continue;  // slope vectors need degree >= 1
      BenefitFunction bfs[3] = {bf_for(inst, curvatures[0]),
                                bf_for(inst, curvatures[1]),
                                bf_for(inst, curvatures[2])};
      const auto& es = inst.pieces();
      for (size_t pi = 0; pi < es.pieces.size() && samples < 1000; ++pi) {
        const auto& pc = es.pieces[pi];
        std::vector<EffortProfile> pool;
        for (const RatVec& v : pc.vertices) pool.push_back({v, inst.e_star});
        for (auto& s :
             sample_piece(pc, inst.e_star, 2, 1234 + static_cast<int>(pi)))
          pool.push_back(std::move(s));
        for (const auto& p : pool) {
          if (samples >= 1000) break;
          ++samples;
          for (const BenefitFunction& bf : bfs) {
            auto wb = welfare_bounds(bf, g, p);
            const double w = welfare(bf, g, p);
            min_slack = std::min({min_slack, w - wb.lower, wb.upper - w});
          }
        }
      }
    }
  };
  feed(ws.grid_family());
  feed(ws.regular_family());
  feed(ws.connected_family());
  feed(ws.small_forest_family());
  feed(ws.covered_family());
  feed(ws.pendant_family());
  if (samples < 1000)
    return make_row(8, false,
                    "only " + std::to_string(samples) +
                        " sampled equilibria were available");
  if (min_slack < -1e-9)
    return make_row(8, false,
                    "sandwich violated: worst one-sided slack " +
                        fp(min_slack));
  return make_row(8, true,
                  "1000 sampled equilibria x 3 curvatures: lower <= welfare "
                  "<= upper held, worst one-sided slack " + fp(min_slack));
}

// --- criterion 9: well-covered forests ---------------------------------------

CriterionResult crit9(Workspace& ws) {
  const double curvatures[3] = {0.01, 1.0, 100.0};
  long cost_points = 0;
  double worst_gap = 0;
  for (auto& inst : ws.covered_family()) {
    const Graph& g = inst.g;
    const auto& es = inst.pieces();
    const Rat half = inst.c * inst.e_star * rat(g.n(), 2);
    for (const auto& pc : es.pieces) {
      for (const RatVec& v : pc.vertices)
        if (cost(inst.c, {v, inst.e_star}) != half)
          return make_row(9, false,
                          inst.tag + ": a vertex costs " +
                              rat_to_string(cost(inst.c, {v, inst.e_star})) +
                              " instead of " + rat_to_string(half));
      if (cost(inst.c, {pc.barycenter(), inst.e_star}) != half)
        return make_row(9, false, inst.tag + ": a barycenter cost is off");
      cost_points += static_cast<long>(pc.vertices.size()) + 1;
    }
    const int want = 100;
    int got = 0;
    const int per = static_cast<int>(
        (want + es.pieces.size() - 1) / es.pieces.size());
    for (size_t pi = 0; pi < es.pieces.size() && got < want; ++pi) {
      for (auto& p : sample_piece(es.pieces[pi], inst.e_star,
                                  std::min(per, want - got),
                                  4242 + static_cast<int>(pi))) {
        if (cost(inst.c, p) != half)
          return make_row(9, false,
                          inst.tag + ": an interior sample costs " +
                              rat_to_string(cost(inst.c, p)) +
                              " instead of " + rat_to_string(half));
        ++got;
      }
    }
    cost_points += got;

    RatVec ones(g.n(), rat(1));
    for (double k : curvatures) {
      BenefitFunction bf = bf_for(inst, k);
      auto spec = specialized_extrema(g, inst.e_star, bf, ones, inst.c);
      auto wm = max_welfare(es, g, bf, 1e-9);
      if (!wm.converged)
        return make_row(9, false, inst.tag + ": welfare search stalled");
      const double scale0 = std::max(1.0, std::abs(wm.value));
      if (std::abs(wm.value - spec.max_welfare) > 1e-9 * scale0)
        return make_row(9, false,
                        inst.tag + ": best welfare " + fp(wm.value) +
                            " != best specialized welfare " +
                            fp(spec.max_welfare) + " at k " + fp(k));
      worst_gap = std::max(
          worst_gap, std::abs(wm.value - spec.max_welfare) / scale0);
      for (const auto& pc : es.pieces) {
        EquilibriumSet sub{es.n, es.e_star, {pc}};
        auto pm = max_welfare(sub, g, bf, 1e-9);
        if (pm.value < wm.value - 1e-9 * scale0) continue;
        for (const RatVec& v : pc.vertices) {
          const double wv = welfare(bf, g, {v, inst.e_star});
          if (wv >= pm.value - 1e-9 * scale0 &&
              !zero_estar_profile(v, inst.e_star))
            return make_row(9, false,
                            inst.tag + ": a non-specialized vertex attains "
                                       "the maximum welfare at k " + fp(k));
        }
      }
    }
  }
  return make_row(9, true,
                  "20 well-covered forests: " + std::to_string(cost_points) +
                      " equilibrium points all cost c e* n/2 exactly; every "
                      "welfare maximizer is specialized at k in {0.01, 1, "
                      "100} (worst relative gap " + fp(worst_gap) + ")");
}

// --- criterion 10: pendant co-specialist improvement -------------------------

CriterionResult crit10(Workspace& ws) {
  // Curvatures stay below ~10: past that the benefit saturates so hard that
  // the true (strictly positive) welfare gain drops under the 1e-12 floor.
  SeededRng rng(808);
  std::vector<double> curvatures;
  for (int i = 0; i < 20; ++i)
    curvatures.push_back(std::pow(10.0, -2.0 + 3.0 * rng.unit()));
  long pairs = 0;
  int instances_hit = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (auto& inst : ws.pendant_family()) {
    const Graph& g = inst.g;
    const std::vector<int> deg = g.degrees();
    const auto& es = inst.pieces();
    bool hit = false;
    for (size_t pi = 0; pi < es.pieces.size(); ++pi) {
      const auto& pc = es.pieces[pi];
      std::vector<EffortProfile> pool;
      pool.push_back({pc.barycenter(), inst.e_star});
      for (auto& s :
           sample_piece(pc, inst.e_star, 2, 5150 + static_cast<int>(pi)))
        pool.push_back(std::move(s));
      for (const auto& p : pool) {
        auto cls = classify(g, p);
        for (auto [i, j] : cls.co_specialist_links) {
          int dep = -1;
          if (deg[i] == 1 && deg[j] > 1)
            dep = i;
          else if (deg[j] == 1 && deg[i] > 1)
            dep = j;
          if (dep < 0) continue;
          EffortProfile better = improve_pendant_cospecialist(g, p, dep);
          if (!check_equilibrium(g, better).ok)
            return make_row(10, false,
                            inst.tag + ": shifted profile is not an "
                                       "equilibrium");
          if (cost(inst.c, better) != cost(inst.c, p))
            return make_row(10, false,
                            inst.tag + ": shifted profile changed the cost");
          for (double k : curvatures) {
            BenefitFunction bf = bf_for(inst, k);
            const double margin =
                welfare(bf, g, better) - welfare(bf, g, p);
            min_margin = std::min(min_margin, margin);
            if (margin <= 1e-12)
              return make_row(10, false,
                              inst.tag + ": margin " + fp(margin) +
                                  " at k " + fp(k) +
                                  " is not strictly positive");
          }
          ++pairs;
          hit = true;
        }
      }
    }
    instances_hit += hit ? 1 : 0;
  }
  if (pairs == 0)
    return make_row(10, false,
                    "no sole-dependant co-specialist pair arose in the "
                    "family");
  return make_row(
      10, true,
      std::to_string(pairs) + " pairs across " +
          std::to_string(instances_hit) +
          " instances: cost preserved exactly, welfare strictly up for all "
          "20 curvatures (smallest margin " + fp(min_margin) + ")");
}

// --- criterion 11: structural battery ----------------------------------------

CriterionResult crit11(Workspace& ws) {
  long n_instances = 0, n_pieces = 0, n_profiles = 0;
  auto battery =
      [&](std::vector<Instance>& family) -> std::optional<std::string> {
    for (auto& inst : family) {
      const Graph& g = inst.g;
      ++n_instances;
      const auto& es = inst.pieces();
      const bool forest = is_forest(g);
      bool pendant_bearing = false;
      for (const auto& pp : dependants_and_guardians(g))
        if (!pp.co_dependant) pendant_bearing = true;
      if (pendant_bearing && distributed_piece(es))
        return inst.tag + ": a distributed piece exists despite a dependant";
      for (size_t pi = 0; pi < es.pieces.size(); ++pi) {
        const auto& pc = es.pieces[pi];
        ++n_pieces;
        std::vector<EffortProfile> pool;
        for (const RatVec& v : pc.vertices) pool.push_back({v, inst.e_star});
        pool.push_back({pc.barycenter(), inst.e_star});
        for (auto& s :
             sample_piece(pc, inst.e_star, 1, 7000 + static_cast<int>(pi)))
          pool.push_back(std::move(s));
        for (const auto& p : pool) {
          ++n_profiles;
          if (!check_equilibrium(g, p).ok)
            return inst.tag + ": enumerated point fails the equilibrium test";
          auto sr = check_equilibrium_structure(g, p);
          if (!sr.ok) return inst.tag + ": " + sr.failures.front();
          auto pr = check_pendant_rules(g, p);
          if (!pr.ok) return inst.tag + ": " + pr.failures.front();
          if (pendant_bearing) {
            bool has_zero = false;
            for (const Rat& v : p.x)
              if (v == 0) has_zero = true;
            if (!has_zero)
              return inst.tag + ": no free rider despite a dependant";
          }
          if (forest) {
            auto cls = classify(g, p);
            for (AgentRole r : cls.roles)
              if (r == AgentRole::other_supporting)
                return inst.tag + ": partial effort outside a co-specialist "
                                  "pair on a forest";
            auto sp = forest_specialize_support(g, p);
            if (!check_equilibrium(g, sp).ok)
              return inst.tag + ": specialized support profile is not an "
                                "equilibrium";
            if (vec_sum(sp.x) != vec_sum(p.x))
              return inst.tag + ": support specialization changed the total "
                                "effort";
            if (!zero_estar_profile(sp.x, inst.e_star))
              return inst.tag + ": support specialization is not 0/e* valued";
            if (forest_cost_formula(g, inst.c, p) != cost(inst.c, p))
              return inst.tag + ": forest cost formula disagrees with the "
                                "actual cost";
          }
        }
        RatVec b = pc.barycenter();
        int rider = -1;
        for (int i = 0; i < g.n() && rider < 0; ++i)
          if (b[i] == 0) rider = i;
        if (rider >= 0) {
          std::vector<int> old_ids;
          Graph sub = induced_subgraph(
              g, g.all_mask() & ~(uint64_t{1} << rider), &old_ids);
          RatVec xr(old_ids.size());
          for (size_t t = 0; t < old_ids.size(); ++t) xr[t] = b[old_ids[t]];
          if (!check_equilibrium(sub, {xr, inst.e_star}).ok)
            return inst.tag + ": removing a free rider disturbed the "
                              "equilibrium";
        }
      }
    }
    return std::nullopt;
  };
  std::vector<Instance>* families[8] = {
      &ws.grid_family(),     &ws.weighted_family(),
      &ws.forest_family(),   &ws.regular_family(),
      &ws.connected_family(), &ws.small_forest_family(),
      &ws.covered_family(),  &ws.pendant_family()};
  for (auto* family : families)
    if (auto bad = battery(*family)) return make_row(11, false, *bad);
  std::ostringstream os;
  os << n_instances << " instances, " << n_pieces << " pieces, " << n_profiles
     << " profiles: domination, role and pendant rules, forest "
        "specialization and cost formula, free-rider existence and removal "
        "all hold";
  return make_row(11, true, os.str());
}

// --- criterion 12: distributed welfare is curvature-free ---------------------

CriterionResult crit12(Workspace&) {
  const double curvatures[3] = {1e-3, 1.0, 1e3};
  std::ostringstream det;
  for (int m : {4, 6}) {
    Instance inst{make_cycle(m), rat(1), rat(1), "cycle" + std::to_string(m),
                  {}};
    const Graph& g = inst.g;
    EffortProfile uniform{RatVec(g.n(), inst.e_star / 3), inst.e_star};
    if (!check_equilibrium(g, uniform).ok)
      return make_row(12, false, inst.tag + ": uniform profile rejected");
    const double ref = welfare(bf_for(inst, 1.0), g, uniform);
    for (double k : curvatures) {
      const double w = welfare(bf_for(inst, k), g, uniform);
      if (std::abs(w - ref) > 1e-12 * std::max(1.0, std::abs(ref)))
        return make_row(12, false,
                        inst.tag + ": uniform welfare moved from " + fp(ref) +
                            " to " + fp(w) + " at k " + fp(k));
    }
    const int beta = independent_domination_number(g);
    const double floor_value =
        g.n() * rat_to_double(bf_for(inst, 1.0).b0) -
        rat_to_double(inst.c * inst.e_star) * beta;
    for (double k : curvatures) {
      auto dx = distributed_extrema(inst.pieces(), g, bf_for(inst, k),
                                    inst.c);
      if (!dx.exists)
        return make_row(12, false, inst.tag + ": no distributed piece");
      if (dx.min_welfare < floor_value - 1e-9)
        return make_row(12, false,
                        inst.tag + ": least distributed welfare " +
                            fp(dx.min_welfare) + " fell under n b(e*) - c e* "
                            "beta = " + fp(floor_value));
    }
    det << inst.tag << " uniform welfare " << fp(ref) << " (floor "
        << fp(floor_value) << "); ";
  }
  return make_row(12, true,
                  det.str() + "welfare identical across k in {1e-3, 1, 1e3}");
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = {
      "",
      "piece enumeration matches a brute-force grid scan",
      "zero-or-e* equilibria are exactly the maximal independent sets",
      "maximum weighted effort equals the weighted independence bound",
      "minimum cost on forests equals the independent domination bound",
      "regular networks: the uniform profile minimizes cost",
      "near-linear benefits: optimum approaches the degree-weighted "
      "specialized profile",
      "plateau benefits on forests: optimum approaches the smallest-MIS "
      "level",
      "linear welfare sandwich brackets sampled equilibria",
      "well-covered forests: constant cost and specialized maximizers",
      "pendant co-specialist shift keeps cost and raises welfare",
      "structural facts hold on every enumerated piece",
      "distributed welfare is curvature-free and above the smallest-MIS "
      "level",
  };
  return names;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            std::ostream* progress) {
  std::vector<int> want = ids;
  if (want.empty())
    for (int i = 1; i <= 12; ++i) want.push_back(i);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  for (int id : want)
    if (id < 1 || id > 12)
      throw std::invalid_argument("criterion id out of range: " +
                                  std::to_string(id));
  using Fn = CriterionResult (*)(Workspace&);
  static const Fn table[13] = {nullptr, crit1, crit2, crit3,  crit4,
                               crit5,   crit6, crit7, crit8,  crit9,
                               crit10,  crit11, crit12};
  Workspace ws;
  std::vector<CriterionResult> out;
  for (int id : want) {
    CriterionResult row = table[id](ws);
    if (progress)
      (*progress) << (row.pass ? "ok   " : "FAIL ") << "criterion " << id
                  << ": " << row.name << std::endl;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace pgg
