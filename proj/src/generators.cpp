#include "pgg/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgg {

Graph gen_gnp(int n, double p, SeededRng& rng) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph gen_tree(int n, SeededRng& rng) {
  Graph g(n);
  if (n <= 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> pruefer(n - 2);
  for (int& v : pruefer) v = static_cast<int>(rng.below(n));
  std::vector<int> deg(n, 1);
  for (int v : pruefer) ++deg[v];
  // repeatedly join the smallest leaf to the next sequence entry
  std::vector<bool> used(n, false);
  for (int v : pruefer) {
    int leaf = -1;
    for (int u = 0; u < n; ++u)
      if (deg[u] == 1 && !used[u]) {
        leaf = u;
        break;
      }
    g.add_edge(leaf, v);
    used[leaf] = true;
    --deg[v];
  }
  int a = -1, b = -1;
  for (int u = 0; u < n; ++u)
    if (deg[u] == 1 && !used[u]) (a == -1 ? a : b) = u;
  g.add_edge(a, b);
  return g;
}

Graph gen_forest(int n, double attach_p, SeededRng& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    if (rng.chance(attach_p)) g.add_edge(static_cast<int>(rng.below(v)), v);
  return g;
}

Graph gen_well_covered_forest(int pairs, SeededRng& rng) {
  if (pairs < 1) throw std::invalid_argument("need at least one pair");
  Graph tree = gen_tree(pairs, rng);
  Graph g(2 * pairs);
  for (auto [u, v] : tree.edges()) g.add_edge(u, v);
  for (int v = 0; v < pairs; ++v) g.add_edge(v, pairs + v);
  if (!is_well_covered_forest(g))
    throw std::logic_error("generator produced an invalid graph");
  return g;
}

Graph gen_connected(int n, double extra_p, SeededRng& rng) {
  Graph g = gen_tree(n, rng);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && rng.chance(extra_p)) g.add_edge(u, v);
  return g;
}

}  // namespace pgg
