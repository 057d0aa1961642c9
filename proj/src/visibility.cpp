#include "pvg/visibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace pvg {

void BlockerMap::set(int i, int j, std::vector<int> chain) {
  if (i == j) throw std::invalid_argument("BlockerMap: pair endpoints coincide");
  if (i > j) {
    std::swap(i, j);
    std::reverse(chain.begin(), chain.end());
  }
  chains_[{i, j}] = std::move(chain);
}

bool BlockerMap::blocked(int i, int j) const {
  if (i > j) std::swap(i, j);
  return chains_.count({i, j}) > 0;
}

std::vector<int> BlockerMap::chain(int from, int to) const {
  int i = from, j = to;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = chains_.find({i, j});
  if (it == chains_.end()) return {};
  std::vector<int> c = it->second;
  if (flip) std::reverse(c.begin(), c.end());
  return c;
}

namespace {

struct PivotRow {
  std::vector<int> visible;                                   // neighbors of the pivot
  std::vector<std::pair<int, std::vector<int>>> blocked;      // far point, chain from pivot
};

// One angular sweep around points[pivot].  Points sharing a ray sort near to
// far, so the nearest is visible and every farther one is blocked by exactly
// the ray points in front of it.
PivotRow sweep_pivot(const PointSet& points, int pivot) {
  const int n = points.size();
  const Point c = points[pivot];
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n) - 1);
  for (int i = 0; i < n; ++i)
    if (i != pivot) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return angular_less(c, points[a], points[b]);
  });

  PivotRow row;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           cross(c, points[order[i]], points[order[j]]) == 0 &&
           // Same side of the pivot; the opposite ray starts a new group.
           (Wide(points[order[i]].x - c.x) * Wide(points[order[j]].x - c.x) +
            Wide(points[order[i]].y - c.y) * Wide(points[order[j]].y - c.y)) > 0) {
      ++j;
    }
    row.visible.push_back(order[i]);
    for (std::size_t k = i + 1; k < j; ++k) {
      std::vector<int> chain(order.begin() + static_cast<long>(i),
                             order.begin() + static_cast<long>(k));
      row.blocked.emplace_back(order[k], std::move(chain));
    }
    i = j;
  }
  return row;
}

}  // namespace

Embedding build_pvg(const PointSet& points, int workers) {
  if (workers < 1) throw std::invalid_argument("build_pvg: workers must be >= 1");
  const int n = points.size();
  std::vector<PivotRow> rows(static_cast<size_t>(n));

  auto run_range = [&](int lo, int hi) {
    for (int v = lo; v < hi; ++v) rows[static_cast<size_t>(v)] = sweep_pivot(points, v);
  };
  workers = std::min(workers, std::max(1, n));
  if (workers == 1 || n < 64) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    int chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      int lo = t * chunk, hi = std::min(n, lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  PairSet edges;
  BlockerMap blockers;
  for (int v = 0; v < n; ++v) {
    for (int w : rows[static_cast<size_t>(v)].visible)
      if (v < w) edges.push_back({v, w});
    for (auto& [w, chain] : rows[static_cast<size_t>(v)].blocked)
      if (v < w) blockers.set(v, w, std::move(chain));
  }
  Embedding e;
  e.points = points;
  e.graph = Graph::from_edges(n, edges);
  e.blockers = std::move(blockers);
  return e;
}

Embedding build_pvg_naive(const PointSet& points) {
  const int n = points.size();
  PairSet edges;
  BlockerMap blockers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> chain;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (strictly_between(points[i], points[k], points[j])) chain.push_back(k);
      }
      if (chain.empty()) {
        edges.push_back({i, j});
      } else {
        std::sort(chain.begin(), chain.end(), [&](int a, int b) {
          return squared_distance(points[i], points[a]) <
                 squared_distance(points[i], points[b]);
        });
        blockers.set(i, j, std::move(chain));
      }
    }
  }
  Embedding e;
  e.points = points;
  e.graph = Graph::from_edges(n, edges);
  e.blockers = std::move(blockers);
  return e;
}

bool verify_embedding(const Embedding& e) {
  if (e.graph.order() != e.points.size()) return false;
  Embedding fresh = build_pvg_naive(e.points);
  return fresh.graph == e.graph && fresh.blockers == e.blockers;
}

namespace {

struct LineKey {
  long long a, b, c;  // a*x + b*y + c = 0, normalized
  auto operator<=>(const LineKey&) const = default;
};

LineKey line_through(Point p, Point q) {
  long long a = q.y - p.y;
  long long b = p.x - q.x;
  long long g = std::gcd(std::abs(a), std::abs(b));
  a /= g;
  b /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  long long c = -(a * p.x + b * p.y);
  return {a, b, c};
}

}  // namespace

std::vector<std::vector<int>> maximal_gsps(const PointSet& points) {
  const int n = points.size();
  std::map<LineKey, std::vector<int>> lines;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto& members = lines[line_through(points[i], points[j])];
      members.push_back(i);
      members.push_back(j);
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& [key, members] : lines) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() < 3) continue;
    // Sort along the line's direction vector (b, -a).
    std::sort(members.begin(), members.end(), [&](int u, int v) {
      Wide du = Wide(key.b) * points[u].x - Wide(key.a) * points[u].y;
      Wide dv = Wide(key.b) * points[v].x - Wide(key.a) * points[v].y;
      return du < dv;
    });
    out.push_back(std::move(members));
  }
  return out;
}

int longest_gsp(const PointSet& points) {
  if (points.size() <= 2) return points.size();
  int best = 2;
  for (const auto& run : maximal_gsps(points))
    best = std::max(best, static_cast<int>(run.size()));
  return best;
}

}  // namespace pvg
