#include "pgg/indep_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgg {

namespace {

struct MisSearch {
  const Graph& g;
  std::vector<uint64_t> nb;
  std::vector<uint64_t> found;

  explicit MisSearch(const Graph& graph) : g(graph) {
    nb.resize(g.n());
    for (int v = 0; v < g.n(); ++v) nb[v] = g.neighbor_mask(v);
  }

  void run() { recurse(0, 0, g.all_mask()); }

  void recurse(uint64_t in, uint64_t out, uint64_t undecided) {
    // dead branch: an excluded vertex that can never see an included neighbor
    for (uint64_t m = out; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      if (!(nb[v] & (in | undecided))) return;
    }
    if (!undecided) {
      // maximality: every excluded vertex already dominated
      for (uint64_t m = out; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        if (!(nb[v] & in)) return;
      }
      found.push_back(in);
      return;
    }
    // branch on the highest-degree undecided vertex (smallest id on ties)
    int pick = -1, best_deg = -1;
    for (uint64_t m = undecided; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      int d = g.degree(v);
      if (d > best_deg) {
        best_deg = d;
        pick = v;
      }
    }
    uint64_t vbit = uint64_t{1} << pick;
    recurse(in | vbit, out | (nb[pick] & undecided),
            undecided & ~(vbit | nb[pick]));
    recurse(in, out | vbit, undecided & ~vbit);
  }
};

}  // namespace

std::vector<NodeSet> enumerate_mis(const Graph& g) {
  MisSearch search(g);
  search.run();
  std::vector<NodeSet> sets;
  sets.reserve(search.found.size());
  for (uint64_t m : search.found) sets.push_back(NodeSet::from_mask(m, g.n()));
  std::sort(sets.begin(), sets.end(), [](const NodeSet& a, const NodeSet& b) {
    return a.members < b.members;
  });
  return sets;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (const NodeSet& s : enumerate_mis(g)) best = std::max(best, s.size());
  return best;
}

int independent_domination_number(const Graph& g) {
  int best = g.n();
  for (const NodeSet& s : enumerate_mis(g)) best = std::min(best, s.size());
  return best;
}

WeightedIndependence weighted_independence(const Graph& g, const RatVec& w) {
  if (static_cast<int>(w.size()) != g.n())
    throw std::invalid_argument("weight vector size mismatch");
  for (const Rat& x : w)
    if (x < 0) throw std::invalid_argument("negative weight");
  std::vector<NodeSet> sets = enumerate_mis(g);
  WeightedIndependence out;
  out.weight = 0;
  out.tie_count = 0;
  bool first = true;
  for (const NodeSet& s : sets) {  // sets already lex-sorted
    Rat total = 0;
    for (int v : s.members) total += w[v];
    if (first || total > out.weight) {
      out.weight = total;
      out.witness = s;
      out.tie_count = 1;
      first = false;
    } else if (total == out.weight) {
      ++out.tie_count;
    }
  }
  if (first) {  // n == 0: the empty set is the unique maximal independent set
    out.witness = NodeSet::from_mask(0, 0);
    out.tie_count = 1;
  }
  return out;
}

bool is_well_covered(const Graph& g) {
  return independence_number(g) == independent_domination_number(g);
}

}  // namespace pgg
