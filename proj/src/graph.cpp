#include "pgg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pgg {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (n > 64) throw std::invalid_argument("vertex count above hard cap of 64");
  adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::out_of_range("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
  adj_[u] |= (uint64_t{1} << v);
  adj_[v] |= (uint64_t{1} << u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n(); ++u)
    if ((adj_[v] >> u) & 1u) out.push_back(u);
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return __builtin_popcountll(adj_[v]);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n());
  for (int v = 0; v < n(); ++v) d[v] = __builtin_popcountll(adj_[v]);
  return d;
}

uint64_t Graph::all_mask() const {
  return n() == 64 ? ~uint64_t{0} : (uint64_t{1} << n()) - 1;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n())
    throw std::invalid_argument("label count mismatch");
  labels_ = std::move(labels);
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  static thread_local std::string tmp;
  if (labels_.empty()) {
    tmp = std::to_string(v);
    return tmp;
  }
  return labels_[v];
}

NodeSet NodeSet::from_mask(uint64_t mask, int n) {
  if (n < 64 && (mask >> n)) throw std::invalid_argument("mask out of range");
  NodeSet s;
  s.mask = mask;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1u) s.members.push_back(v);
  return s;
}

NodeSet NodeSet::from_members(std::vector<int> members, int n) {
  NodeSet s;
  std::sort(members.begin(), members.end());
  for (size_t i = 0; i < members.size(); ++i) {
    int v = members[i];
    if (v < 0 || v >= n) throw std::invalid_argument("member out of range");
    if (i > 0 && members[i - 1] == v)
      throw std::invalid_argument("duplicate member");
    s.mask |= (uint64_t{1} << v);
  }
  s.members = std::move(members);
  return s;
}

bool is_independent(const Graph& g, uint64_t set) {
  for (int v = 0; v < g.n(); ++v)
    if (((set >> v) & 1u) && (g.neighbor_mask(v) & set)) return false;
  return true;
}

bool is_dominating(const Graph& g, uint64_t set) {
  for (int v = 0; v < g.n(); ++v)
    if (!((set >> v) & 1u) && !(g.neighbor_mask(v) & set)) return false;
  return true;
}

bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& links) {
  uint64_t seen = 0;
  for (auto [u, v] : links) {
    if (!g.has_edge(u, v)) return false;
    uint64_t pair_mask = (uint64_t{1} << u) | (uint64_t{1} << v);
    if (seen & pair_mask) return false;
    seen |= pair_mask;
  }
  return true;
}

namespace {

// DFS over the whole graph; returns per-vertex component id.
std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  int next = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_forest(const Graph& g) {
  std::vector<int> comp = component_ids(g);
  int comps = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  // acyclic iff |E| = |V| - #components
  return g.edge_count() == g.n() - comps;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<int> comp = component_ids(g);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp = component_ids(g);
  int comps = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<int>> out(comps);
  for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("regular_degree needs n >= 1");
  int d = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

Graph induced_subgraph(const Graph& g, uint64_t keep, std::vector<int>* old_ids) {
  std::vector<int> ids;
  std::vector<int> new_id(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if ((keep >> v) & 1u) {
      new_id[v] = static_cast<int>(ids.size());
      ids.push_back(v);
    }
  Graph h(static_cast<int>(ids.size()));
  for (auto [u, v] : g.edges())
    if (new_id[u] != -1 && new_id[v] != -1) h.add_edge(new_id[u], new_id[v]);
  std::vector<std::string> labels;
  for (int v : ids) labels.push_back(g.label(v));
  h.set_labels(std::move(labels));
  if (old_ids) *old_ids = std::move(ids);
  return h;
}

std::vector<PendantPair> dependants_and_guardians(const Graph& g) {
  std::vector<PendantPair> out;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 1) continue;
    int guardian = g.neighbors(v)[0];
    out.push_back({v, guardian, g.degree(guardian) == 1});
  }
  return out;
}

bool is_well_covered_forest(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("not a forest");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) throw std::invalid_argument("isolated vertex");
  // pendant edges = edges with a degree-1 endpoint; test they form a
  // perfect matching
  uint64_t covered = 0;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) != 1 && g.degree(v) != 1) continue;
    uint64_t pair_mask = (uint64_t{1} << u) | (uint64_t{1} << v);
    if (covered & pair_mask) return false;  // two pendant edges share a vertex
    covered |= pair_mask;
  }
  return covered == g.all_mask();
}

namespace {

bool is_nonneg_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  // forbid leading zeros except "0" itself so numeric sort is unambiguous
  return s.size() == 1 || s[0] != '0';
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> raw_edges;
  bool have_header = false;
  long header_n = -1;
  bool first_significant = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (first_significant && tok.size() == 2 && tok[0] == "n" &&
        is_nonneg_integer(tok[1])) {
      header_n = std::stol(tok[1]);
      if (header_n > 64)
        throw std::invalid_argument("vertex count above hard cap of 64");
      have_header = true;
      first_significant = false;
      continue;
    }
    first_significant = false;
    if (tok.size() != 2)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected two labels");
    if (tok[0] == tok[1])
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": self-loop rejected");
    raw_edges.emplace_back(tok[0], tok[1]);
  }

  if (!have_header && raw_edges.empty())
    throw std::invalid_argument("edge list holds no edges and no header");

  std::map<std::string, int> id_of;
  std::vector<std::string> labels;
  if (have_header) {
    for (long v = 0; v < header_n; ++v) {
      labels.push_back(std::to_string(v));
      id_of[labels.back()] = static_cast<int>(v);
    }
    for (auto& [a, b] : raw_edges)
      for (const std::string* s : {&a, &b})
        if (!id_of.count(*s))
          throw std::invalid_argument("label '" + *s +
                                      "' outside declared range");
  } else {
    std::set<std::string> label_set;
    for (auto& [a, b] : raw_edges) {
      label_set.insert(a);
      label_set.insert(b);
    }
    if (label_set.size() > 64)
      throw std::invalid_argument("vertex count above hard cap of 64");
    labels.assign(label_set.begin(), label_set.end());
    bool all_numeric = true;
    for (const std::string& s : labels)
      if (!is_nonneg_integer(s)) all_numeric = false;
    if (all_numeric)
      std::sort(labels.begin(), labels.end(),
                [](const std::string& a, const std::string& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
    for (size_t i = 0; i < labels.size(); ++i)
      id_of[labels[i]] = static_cast<int>(i);
  }

  Graph g(static_cast<int>(labels.size()));
  g.set_labels(labels);
  for (auto& [a, b] : raw_edges) {
    int u = id_of[a], v = id_of[b];
    if (g.has_edge(u, v))
      throw std::invalid_argument("duplicate edge " + a + " " + b);
    g.add_edge(u, v);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph make_path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_cube() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      int u = v ^ (1 << bit);
      if (v < u) g.add_edge(v, u);
    }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

}  // namespace pgg
