// Hardness gadget and realizability formulas.  Any small graph G extends to
// a visibility graph G' by adding one universal blocker per non-edge, with a
// certified integer embedding; minimum vertex cover and maximum clique grow
// by exactly the number of blockers while the maximum independent set is
// unchanged.  Separately, every graph yields a nonlinear real-arithmetic
// formula that is satisfiable exactly when the graph has a visibility
// embedding; the formula can be serialized to SMT-LIB 2 and evaluated
// directly against candidate coordinates.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pvg/graph.hpp"
#include "pvg/visibility.hpp"

namespace pvg {

// A base graph extended to a visibility graph by universal blockers.
// Vertex v of `base` is vertex injection[v] of `extended`; `base` is the
// induced subgraph of `extended` on the injected vertices, and each of the
// `added` blocker vertices is adjacent to every other vertex of `extended`.
// `embedding` realizes `extended` under the identity correspondence.
struct Gadget {
  Graph base;
  Graph extended;
  Embedding embedding;
  int added = 0;               // blockers placed; equals the non-edge count
  std::vector<int> injection;  // base vertex -> extended vertex
};

// Builds the gadget for a graph of order 1..12 (larger orders throw).
//
// Base vertices sit on the parabola (i, i^2) — convex position, no three
// collinear — so the initial visibility graph is complete.  Every non-edge
// {i, j} of the base, in lexicographic order, then receives a blocker on the
// open segment p_i p_j at parameter a/D, for the smallest a in 1..D-1 whose
// point is collinear with no two existing points other than p_i and p_j and
// blocks no pair other than {i, j}.  All coordinates carry the common
// denominator D = 2N^2 + 1 (N = final point count), which exceeds the number
// of spoilt parameter values at every step, so a valid a always exists; when
// no blockers are needed the parabola is kept unscaled.  The result is
// post-verified: build_pvg on the points must reproduce `extended`, which
// must equal the base plus `added` universal vertices.  If verification
// fails, the construction retries with D doubled, and reports every
// denominator tried if it gives up.
Gadget build_gadget(const Graph& g);

// The realizability formula of a graph on vertices 0..n-1 over variables
// x_i, y_i (one point per vertex) and t_i_j_k (one per unordered pair
// {i, j}, i < j, and third vertex k, in pair-lexicographic order with k
// ascending — C(n,2)*(n-2) of them in total).  Assertions, in order:
//   - for every pair i < j, the points i and j are distinct;
//   - for every non-edge {i, j}, some k satisfies 0 < t < 1 together with
//     the parametrization p_k = p_i + t*(p_j - p_i);
//   - for every edge {i, j}, every k lies off the line through p_i and p_j
//     (orientation determinant nonzero) or satisfies the parametrization
//     with t outside [0, 1].
// An empty disjunction is emitted as `false`; an empty conjunction is
// omitted.  With `strict_compat` set, the outside-segment branch tests
// t < -1 instead of t < 0, reproducing a circulated variant of the formula
// whose lower bound is off by one; evaluation always uses t < 0.
struct EtrFormula {
  int order = 0;
  bool strict_compat = false;
  std::vector<std::string> coordinate_variables;  // x_0, y_0, x_1, y_1, ...
  std::vector<std::string> t_variables;           // t_0_1_2, t_0_1_3, ...
  std::vector<std::string> assertions;            // SMT terms, fixed order

  // Full SMT-LIB 2 script (logic QF_NRA): declarations in inventory order,
  // assertions in clause order, then (check-sat).  Byte-deterministic.
  std::string smt2() const;
};

// Emits the formula for a graph of order >= 2 (smaller orders throw).
EtrFormula emit_etr(const Graph& g, bool strict_compat = false);

// Decides the formula of `g` at the given coordinates: each t_i_j_k is
// solved from the parametrization when {i, j, k} are collinear and is free
// otherwise, so the value is computed exactly with integer predicates.
// True iff the points realize g, i.e. build_pvg(points).graph == g.
// Throws when the point count differs from the vertex count.
bool eval_etr(const Graph& g, const PointSet& points);

}  // namespace pvg
