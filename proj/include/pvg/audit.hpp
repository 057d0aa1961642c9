// Embedding-level audits: convex layers, a layered Hamiltonian-cycle
// construction, blocker-count bounds, a battery of visibility-graph
// invariants with re-checkable witnesses, and exhaustive grid search for
// embeddings of small graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"
#include "pvg/visibility.hpp"

namespace pvg {

// Nested convex hulls.  layers[0] holds every point on the outer hull
// boundary, collinear boundary points included; each following layer is the
// hull of what remains.  A layer with three or more corners is a cycle in
// clockwise order starting at its lexicographically least point; a layer
// whose points are collinear (possible only innermost) is a path ordered
// from its lexicographically least end.
struct ConvexLayers {
  std::vector<std::vector<int>> layers;
  std::vector<char> is_cycle;  // parallel to layers

  std::size_t depth() const { return layers.size(); }
};

ConvexLayers convex_layers(const PointSet& points);

// True when `cycle` visits every vertex of g exactly once and consecutive
// vertices, the wrap-around pair included, are edges.
bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle);

// Builds a Hamiltonian cycle of e.graph by walking the outer convex layer
// clockwise and splicing each inner layer into the cycle along tangent
// edges.  Path graphs (in particular all-collinear embeddings) have no
// Hamiltonian cycle and are rejected with std::invalid_argument.  The
// result is validated before it is returned; e must be a faithful
// embedding or std::logic_error is thrown.
std::vector<int> hamiltonian_cycle(const Embedding& e);

struct BlockerBound {
  std::vector<int> blockers;  // union of the chains over a x c, sorted
  std::size_t bound = 0;      // |a| + |c| - 1
  bool pass = false;          // blockers.size() >= bound
};

// Counts the distinct blockers over all pairs of a x c.  Both sets must be
// nonempty, disjoint, and completely invisible to one another; otherwise
// std::invalid_argument.  Members of a and c may themselves act as
// blockers and are counted like any other vertex.
BlockerBound blocker_bound_check(const Embedding& e, const std::vector<int>& a,
                                 const std::vector<int>& c);

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // failure evidence, empty when the check passed
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  int blocker_samples = 0;  // how many sampled set pairs were counted

  bool all_passed() const;
  const AuditCheck* find(const std::string& name) const;
};

struct AuditOptions {
  int clique_max_order = 24;  // skip the clique bound on larger graphs
  int blocker_samples = 8;    // sampled invisible set pairs per embedding
  std::uint64_t seed = 1;
};

// Runs every structural invariant of a visibility embedding and reports one
// entry per check.  Checks that do not apply (for example Hamiltonicity of
// a path) pass vacuously.  The battery:
//
//   round-trip                 graph and blockers equal the rebuilt ones
//   connected                  the graph is connected
//   straight-path-neighbor     every maximal collinear run of >= 3 points
//                              has an outside vertex adjacent to all of it
//   edge-count                 m >= (k-1) + k(n-k) for every maximal
//                              straight-path length k, 2 included when some
//                              pair lies in no longer run
//   off-path-degree            vertices off a k-run have degree >= k
//   min-degree                 every degree >= ceil((n-1)/(k-1)), k longest
//   diameter                   non-complete, non-path graphs have diameter 2
//   bfs-depth                  every BFS tree has at most 3 levels
//   neighborhood-connectivity  open neighborhoods induce connected graphs
//   clique-bound               max clique <= 2 * min degree
//   bipartite-path             bipartite exactly when the graph is a path
//   triangle-free-path         triangle-free exactly when the graph is a path
//   hamiltonian-cycle          the layered construction yields a valid cycle
//   blocker-count              sampled invisible pairs of sets meet the
//                              |B| >= |A| + |C| - 1 bound
AuditReport audit_embedding(const Embedding& e, const AuditOptions& options = {});

enum class SearchOutcome { found, exhausted, timeout };

const char* to_string(SearchOutcome o);

struct GridSearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double time_limit_seconds = 10.0;
  int workers = 1;
};

struct GridSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<Embedding> embedding;  // set only when found
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Exhaustive search for a width x height grid embedding whose visibility
// graph equals g under the identity correspondence.  Graph order is capped
// at 10 and the grid at 64 cells.  Placement is depth-first over cells in
// lexicographic order; sequences equivalent under grid reflection and, on
// square grids, transposition are generated once, canonical-least first,
// so the reported embedding is the least placement sequence that realizes
// g.  Workers split the search by the first placement; for searches that
// finish within their budget, outcome and embedding do not depend on the
// worker count (nodes and seconds may).  The node budget is divided evenly
// among the workers; exceeding it, or the time limit, reports timeout.
GridSearchResult grid_search_embedding(const Graph& g, int width, int height,
                                       const GridSearchBudget& budget = {});

}  // namespace pvg
