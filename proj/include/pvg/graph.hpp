// Undirected simple graphs on vertices 0..n-1, plus the small-graph
// machinery used throughout: chordless-path predicates, BFS profiles,
// exhaustive clique / independent-set / vertex-cover optima, and
// isomorphism for graphs of bounded order.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pvg {

using VertexPair = std::pair<int, int>;  // always stored with first < second
using PairSet = std::vector<VertexPair>;

class Graph {
 public:
  Graph() = default;

  // Edges must satisfy 0 <= u < v < n with no duplicates.
  static Graph from_edges(int n, const PairSet& edges);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  int min_degree() const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  const PairSet& edges() const { return edges_; }  // sorted lexicographically

  bool is_connected() const;
  Graph complement() const;
  Graph induced(const std::vector<int>& vertices) const;
  Graph with_edge_toggled(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  PairSet edges_;
  std::vector<std::vector<int>> adj_;
  // Dense pair bitset, kept only for small orders; larger graphs fall back
  // to binary search in the sorted neighbor lists.
  std::vector<std::uint64_t> bits_;
  bool has_bits_ = false;
};

inline constexpr int kDenseAdjacencyMaxOrder = 4096;

// All vertex pairs that are not edges.
PairSet invisible_pairs(const Graph& g);

// True when g is P_n: connected, m = n-1, maximum degree <= 2 (n=1 counts).
bool is_path_graph(const Graph& g);

// True when `sequence` is a chordless path of g: consecutive vertices
// adjacent, all other pairs non-adjacent, vertices distinct.
bool is_csp(const Graph& g, const std::vector<int>& sequence);

// Every chordless path from u to w with at most max_interior interior
// vertices, sorted lexicographically.  u and w must be distinct.
std::vector<std::vector<int>> chordless_paths(const Graph& g, int u, int w,
                                              int max_interior);

// Vertex count per BFS level from root; level 0 is the root itself.
// Unreachable vertices are not counted.
std::vector<int> bfs_levels(const Graph& g, int root);

bool diameter_at_most(const Graph& g, int d);

struct Optima {
  int vertex_cover = 0;
  int independent_set = 0;
  int clique = 0;
};

// Exact optima by branch-and-bound enumeration, order capped at 64.
int brute_max_clique(const Graph& g);
Optima brute_optima(const Graph& g);

// Edge lower bound (k-1) + k(n-k) for an n-vertex visibility graph whose
// longest straight path has k vertices.
long long edge_lower_bound(int k, int n);

// Largest admissible order of a planar visibility graph with a k-point
// straight path, k >= 4: k + floor((2k-5)/(k-3)).
int planar_vertex_bound(int k);

// Minimum-degree bound ceil((n-1)/(k-1)), k >= 2.
int min_degree_bound(long long n, int k);

// Backtracking isomorphism for graphs of order <= 12.  On success the
// returned vector maps vertices of a onto vertices of b.
std::optional<std::vector<int>> graph_isomorphic(const Graph& a, const Graph& b);

// Canonical adjacency key for graphs of order <= 11 (bit i*n+j over the
// lexicographically smallest relabeling).  Equal keys <=> isomorphic.
std::uint64_t canonical_key(const Graph& g);

}  // namespace pvg
