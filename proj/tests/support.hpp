// Shared test fixtures and generators.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvgtest {

inline pvg::PointSet random_point_set(std::mt19937_64& rng, int n, long long lo,
                                      long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  std::set<pvg::Point> seen;
  while (static_cast<int>(seen.size()) < n) seen.insert({d(rng), d(rng)});
  return pvg::PointSet(std::vector<pvg::Point>(seen.begin(), seen.end()));
}

// Thirteen points in four horizontal rows: the origin, then (i,1), (2i,2),
// (3i,3) for i = 1..4.  Rays through the origin line up one point per row,
// which makes the blocker structure fully collinear along those rays.
inline pvg::PointSet thirteen_point_rows() {
  std::vector<pvg::Point> pts{{0, 0}};
  for (int i = 1; i <= 4; ++i) pts.push_back({i, 1});
  for (int i = 1; i <= 4; ++i) pts.push_back({2 * i, 2});
  for (int i = 1; i <= 4; ++i) pts.push_back({3 * i, 3});
  return pvg::PointSet(pts);
}

inline pvg::Graph relabeled(const pvg::Graph& g, const std::vector<int>& perm) {
  pvg::PairSet e;
  for (auto [u, v] : g.edges()) {
    int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return pvg::Graph::from_edges(g.order(), e);
}

}  // namespace pvgtest
