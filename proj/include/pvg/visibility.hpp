// Point visibility graphs over exact integer coordinates: two points see
// each other iff no third point lies in the open segment between them.
#pragma once

#include <map>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

// For every invisible pair the ordered list of points in the open segment.
// Chains are keyed by (i, j) with i < j and run from p_i towards p_j.
class BlockerMap {
 public:
  using Map = std::map<VertexPair, std::vector<int>>;

  void set(int i, int j, std::vector<int> chain);
  bool blocked(int i, int j) const;
  // Blockers ordered from p_from towards p_to; empty when the pair is visible.
  std::vector<int> chain(int from, int to) const;
  const Map& entries() const { return chains_; }
  std::size_t size() const { return chains_.size(); }

  friend bool operator==(const BlockerMap&, const BlockerMap&) = default;

 private:
  Map chains_;
};

struct Embedding {
  PointSet points;
  Graph graph;        // vertex i <-> points[i]
  BlockerMap blockers;
};

// O(n^2 log n) angular-sweep construction.  With workers > 1 the sweep is
// partitioned by pivot; results are identical for every worker count.
Embedding build_pvg(const PointSet& points, int workers = 1);

// O(n^3) reference construction testing every third point per pair.
Embedding build_pvg_naive(const PointSet& points);

// True when e.graph/e.blockers are exactly the visibility structure of
// e.points under the identity correspondence.
bool verify_embedding(const Embedding& e);

// Maximal sets of >= 3 collinear points, each sorted along its line,
// ordered by normalized line coefficients.
std::vector<std::vector<int>> maximal_gsps(const PointSet& points);

// Size of the largest maximal straight path (2 when no 3 points align,
// 0/1 for degenerate inputs).
int longest_gsp(const PointSet& points);

}  // namespace pvg
