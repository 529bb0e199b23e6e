#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgg {

// Undirected simple graph on dense 0-based vertex ids, adjacency kept as
// 64-bit neighbor masks. Hard cap of 64 vertices; the equilibrium enumerator
// applies its own much smaller bound. Ingestion can carry original labels
// (used by weight files and DOT export); they default to decimal ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v);  // rejects out-of-range, self-loop, duplicate
  bool has_edge(int u, int v) const;

  uint64_t neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  std::vector<int> degrees() const;

  // Edges normalized to u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  uint64_t all_mask() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& label(int v) const;

 private:
  void check_vertex(int v) const;
  std::vector<uint64_t> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;  // empty => decimal ids
};

// Subset of vertices as a bitmask plus the sorted member list.
struct NodeSet {
  uint64_t mask = 0;
  std::vector<int> members;  // sorted ascending

  static NodeSet from_mask(uint64_t mask, int n);
  static NodeSet from_members(std::vector<int> members, int n);
  bool contains(int v) const { return (mask >> v) & 1u; }
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const NodeSet& o) const { return mask == o.mask; }
};

// true iff set spans no edge
bool is_independent(const Graph& g, uint64_t set);
// true iff every vertex outside the set has a neighbor inside
bool is_dominating(const Graph& g, uint64_t set);
// true iff the given edges exist and are pairwise vertex-disjoint
bool is_matching(const Graph& g, const std::vector<std::pair<int, int>>& links);

bool is_forest(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Common degree if the graph is regular. Requires n >= 1.
std::optional<int> regular_degree(const Graph& g);

// Subgraph induced by `keep`; old_ids (optional out) maps new id -> old id.
Graph induced_subgraph(const Graph& g, uint64_t keep,
                       std::vector<int>* old_ids = nullptr);

// A dependant is a degree-1 vertex; its guardian is the unique neighbor.
// Co-dependants are two adjacent degree-1 vertices (an isolated link).
struct PendantPair {
  int dependant;
  int guardian;
  bool co_dependant;
};
std::vector<PendantPair> dependants_and_guardians(const Graph& g);

// For a forest without isolated vertices: true iff the pendant edges (edges
// incident to a degree-1 vertex) form a perfect matching. Equivalent to the
// graph being well-covered, in which case every maximal independent set has
// exactly n/2 members. Throws if the graph is not a forest or has an
// isolated vertex.
bool is_well_covered_forest(const Graph& g);

// --- edge-list text format -------------------------------------------------
// One edge per line as two whitespace-separated labels. Lines whose first
// token starts with '#' are comments. An optional first line "n <count>"
// fixes the vertex count, in which case labels must be integers in
// [0, count). Without the header, labels are arbitrary strings remapped to
// dense ids (numeric label sets sort numerically, otherwise lexically).
// Self-loops and duplicate edges are hard errors.
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// --- fixtures ----------------------------------------------------------------
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);     // center 0, leaves 1..leaves
Graph make_complete(int n);
Graph make_cube();               // 3-cube, 8 vertices, 3-regular
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace pgg
