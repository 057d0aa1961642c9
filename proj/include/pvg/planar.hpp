// Recognition and reconstruction of planar visibility graphs: six parametric
// path-plus-apex families, a finite catalog of sporadic graphs found by grid
// enumeration, and integer-coordinate embeddings for every positive verdict.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"
#include "pvg/visibility.hpp"

namespace pvg {

// The six families share one shape: a chordless path plus up to two apexes.
//   family_a: the bare path.
//   family_b: one apex adjacent to every path vertex.
//   family_c: two mutually adjacent apexes, each adjacent to everything else.
//   family_d: two non-adjacent apexes, each adjacent to every path vertex.
//   family_e: a full apex adjacent to everything plus a partial apex that
//             misses exactly one path endpoint.
//   family_f: as family_e but the partial apex misses an interior path vertex.
enum class PlanarKind {
  family_a,
  family_b,
  family_c,
  family_d,
  family_e,
  family_f,
  particular,
  not_planar_pvg,
};

const char* to_string(PlanarKind kind);

// Classification verdict.  Family verdicts carry the path order and apex
// vertices of the input graph; particular verdicts carry the catalog id and
// the vertex bijection from the catalog entry onto the input.
struct PlanarClass {
  PlanarKind kind = PlanarKind::not_planar_pvg;
  int order = 0;
  std::vector<int> path;       // path vertex ids in path order
  int apex1 = -1;              // b/c/d: first apex; e/f: the full apex
  int apex2 = -1;              // c/d: second apex; e/f: the partial apex
  int missed = -1;             // e/f: path vertex the partial apex cannot see
  int particular_id = 0;       // 1-based catalog id
  std::vector<int> bijection;  // particular: catalog vertex -> input vertex
  std::string reason;          // set for not_planar_pvg

  bool positive() const { return kind != PlanarKind::not_planar_pvg; }
};

// Smallest order at which the family shape exists (family_f needs a path
// interior vertex).  Throws for non-family kinds.
int family_min_order(PlanarKind kind);

// Canonical instance of a family on vertices 0..n-1: path vertices first in
// path order, then the apexes (full apex before partial apex).  The partial
// apex of family_e misses path vertex 0; family_f's misses path vertex 1.
Graph family_template(PlanarKind kind, int n);

// Decides whether g is a planar visibility graph and names the match.  Small
// graphs are matched by isomorphism against family instances and the catalog;
// from nine vertices on, apexes are recovered from the degree threshold
// deg >= n-3 and matched structurally in O(n + m).
PlanarClass classify(const Graph& g);

// Integer coordinates (all magnitudes below the order) realizing a positive
// classification; the embedding's graph equals the classified graph.
// Throws std::invalid_argument on negative or malformed classes.
Embedding reconstruct(const PlanarClass& c);

// classify + reconstruct; absent exactly when classification is negative.
std::optional<Embedding> recognize_and_reconstruct(const Graph& g);

// Exact planarity (Boyer-Myrvold).
bool is_planar_graph(const Graph& g);

// A sporadic planar visibility graph found by grid enumeration, with the
// witnessing point set.
struct CatalogEntry {
  int id = 0;  // 1-based, ordered by (order, canonical key)
  Graph graph;
  PointSet points;
  std::uint64_t key = 0;  // canonical_key(graph)
  int gsp = 0;            // longest collinear run in `points` (the smallest
                          // found over all embeddings of this class)
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  bool complete = true;  // false when the enumeration budget ran out
  int width = 0, height = 0;
  std::uint64_t subsets_seen = 0;

  int classes_of(int n) const;
};

struct CatalogBudget {
  std::uint64_t max_subsets = ~std::uint64_t{0};
  double time_limit_seconds = 900.0;
  int workers = 1;
  std::vector<int> sizes = {6, 7};
};

// Enumerates point subsets of the given sizes on a width x height grid up to
// translation and grid symmetry, groups the planar visibility graphs by
// canonical form, and keeps the sporadic classes: those realizable with no
// four collinear points, plus those matching no family instance at all.
// Family instances realizable only with a longer collinear run are the
// families' own business and are dropped.  The grid may have at most 64
// cells.  Each entry's points are the lexicographically least embedding
// among those minimizing the longest collinear run.
Catalog build_catalog(int width, int height, const CatalogBudget& budget = {});

// The frozen result of build_catalog(7, 7): the five sporadic graphs.
const Catalog& builtin_catalog();

}  // namespace pvg
