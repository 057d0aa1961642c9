// Combinatorial necessary conditions for a graph to be a point visibility
// graph, checked without any embedding:
//
//   NC1  every rooted BFS has at most 3 levels and every open neighborhood
//        induces a connected subgraph (vacuous for path graphs);
//   NC2  every invisible pair can be assigned a vertex-blocker chain (the
//        interior of a chordless path) such that overlapping chains of
//        pairs sharing an endpoint merge into a single chordless path and
//        blocker roles are antisymmetric;
//   NC3  some valid assignment admits, at every vertex, a linear order of
//        its neighbors in which consecutive "rays" (a neighbor plus the
//        invisible vertices it fronts) are completely mutually adjacent.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pvg/graph.hpp"
#include "pvg/visibility.hpp"

namespace pvg {

enum class Verdict { satisfied, refuted, inconclusive };

const char* to_string(Verdict v);

struct SearchLimits {
  std::uint64_t max_nodes = 10'000'000;
  double time_limit_seconds = 10.0;
  // Interior cap for candidate chains; -1 picks n-2 for n <= 12 and 4
  // otherwise.  n-2 makes exhaustion complete.
  int max_interior = -1;

  int resolved_max_interior(int n) const {
    if (max_interior >= 0) return max_interior;
    return n <= 12 ? n - 2 : 4;
  }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  bool budget_exhausted = false;
};

struct Nc1Result {
  Verdict verdict = Verdict::satisfied;
  int offending_root = -1;    // BFS root with more than 3 levels
  int offending_vertex = -1;  // vertex with a disconnected neighborhood
};

// Requires g connected; throws std::invalid_argument otherwise.
Nc1Result check_nc1(const Graph& g);

// One chain per invisible pair, stored under (i, j) with i < j and oriented
// from i; chains read through `chain(from, to)` reorient on the fly.
class BlockerAssignment {
 public:
  using Map = std::map<VertexPair, std::vector<int>>;

  void set(int i, int j, std::vector<int> chain);
  std::vector<int> chain(int from, int to) const;
  bool contains(int i, int j) const;
  const Map& entries() const { return chains_; }

  // Geometric projection: the blocker chains of an embedding.
  static BlockerAssignment from_blockers(const BlockerMap& blockers);

  friend bool operator==(const BlockerAssignment&, const BlockerAssignment&) = default;

 private:
  Map chains_;
};

struct AssignmentCheck {
  Verdict verdict = Verdict::satisfied;
  std::string violation;  // first violation in key order, empty if none
};

AssignmentCheck verify_assignment(const Graph& g, const BlockerAssignment& a);

struct Nc2Result {
  Verdict verdict = Verdict::inconclusive;
  std::optional<BlockerAssignment> witness;
  SearchStats stats;
};

Nc2Result search_nc2(const Graph& g, const SearchLimits& limits = {});

enum class EnumOutcome { exhausted, stopped, budget };

// Depth-first enumeration of all valid assignments in deterministic order;
// the callback returns false to stop early.
EnumOutcome enumerate_assignments(const Graph& g, const SearchLimits& limits,
                                  const std::function<bool(const BlockerAssignment&)>& yield,
                                  SearchStats* stats = nullptr);

// order_at[v] lists the neighbors of v in ray order (empty for vertices of
// degree 0 in degenerate graphs).
struct RayOrdering {
  std::vector<std::vector<int>> order_at;
};

struct Nc3Check {
  Verdict verdict = Verdict::satisfied;
  int failing_vertex = -1;  // refuted: no admissible order there
  std::optional<RayOrdering> ordering;
};

// Widest vertex the subset-DP ray solver will order exactly.
inline constexpr int kMaxOrderedDegree = 24;

// Decides NC3 for one fixed assignment via subset DP per vertex; vertices of
// degree above kMaxOrderedDegree make the result inconclusive.  Vacuous for
// path graphs, like NC1.
Nc3Check check_nc3_for_assignment(const Graph& g, const BlockerAssignment& a);

// Re-checks a concrete ordering (e.g. the angular order of an embedding).
bool verify_ray_ordering(const Graph& g, const BlockerAssignment& a,
                         const RayOrdering& rays, int* failing_vertex = nullptr);

struct NcReport {
  Verdict nc1 = Verdict::inconclusive;
  std::optional<Verdict> nc2;  // absent: not attempted (NC1 refuted)
  std::optional<Verdict> nc3;
  std::optional<BlockerAssignment> assignment;  // NC3 witness if satisfied
  std::optional<RayOrdering> ordering;
  std::string detail;
  SearchStats stats;
};

// Runs NC1, then NC2, then NC3, each phase under its own budget.  NC1
// refuted stops the pipeline; NC2 refuted settles NC3 (no valid assignment
// can exist).
NcReport check_conditions(const Graph& g, const SearchLimits& limits = {});

// Neighbors of every point in counterclockwise angular order, cut so that a
// reflex or straight gap, when present, falls between the last and first
// rays.  For a real embedding this ordering always verifies.
RayOrdering angular_ray_ordering(const Embedding& e);

}  // namespace pvg
