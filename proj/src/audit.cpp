#include "pvg/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

namespace pvg {

namespace {

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// Strict hull corners of the listed points, counterclockwise, starting at
// the lexicographically least point.  Requires at least three points not
// all collinear.
std::vector<int> hull_corners(const PointSet& pts, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end(),
            [&](int a, int b) { return pts[a] < pts[b]; });
  const int m = static_cast<int>(ids.size());
  std::vector<int> hull(static_cast<std::size_t>(2 * m));
  int h = 0;
  for (int i = 0; i < m; ++i) {
    const int v = ids[static_cast<std::size_t>(i)];
    while (h >= 2 && orientation(pts[hull[static_cast<std::size_t>(h - 2)]],
                                 pts[hull[static_cast<std::size_t>(h - 1)]],
                                 pts[v]) <= 0)
      --h;
    hull[static_cast<std::size_t>(h++)] = v;
  }
  for (int i = m - 2, base = h + 1; i >= 0; --i) {
    const int v = ids[static_cast<std::size_t>(i)];
    while (h >= base && orientation(pts[hull[static_cast<std::size_t>(h - 2)]],
                                    pts[hull[static_cast<std::size_t>(h - 1)]],
                                    pts[v]) <= 0)
      --h;
    hull[static_cast<std::size_t>(h++)] = v;
  }
  hull.resize(static_cast<std::size_t>(h - 1));
  return hull;
}

}  // namespace

ConvexLayers convex_layers(const PointSet& points) {
  ConvexLayers out;
  std::vector<int> remaining(static_cast<std::size_t>(points.size()));
  std::iota(remaining.begin(), remaining.end(), 0);
  while (!remaining.empty()) {
    bool flat = true;
    for (std::size_t i = 2; i < remaining.size() && flat; ++i)
      flat = collinear(points[remaining[0]], points[remaining[1]],
                       points[remaining[i]]);
    if (remaining.size() <= 2 || flat) {
      std::sort(remaining.begin(), remaining.end(),
                [&](int a, int b) { return points[a] < points[b]; });
      out.layers.push_back(std::move(remaining));
      out.is_cycle.push_back(0);
      break;
    }
    const std::vector<int> corners = hull_corners(points, remaining);
    std::vector<char> taken(static_cast<std::size_t>(points.size()), 0);
    for (int v : corners) taken[static_cast<std::size_t>(v)] = 1;
    std::vector<int> ring;
    const std::size_t c = corners.size();
    for (std::size_t i = 0; i < c; ++i) {
      // corners are counterclockwise; walking them backwards from the first
      // yields the ring in clockwise order, lexicographically least first
      const int a = corners[i == 0 ? 0 : c - i];
      const int b = corners[c - 1 - i];
      ring.push_back(a);
      std::vector<int> run;
      for (int v : remaining)
        if (!taken[static_cast<std::size_t>(v)] &&
            strictly_between(points[a], points[v], points[b]))
          run.push_back(v);
      std::sort(run.begin(), run.end(), [&](int x, int y) {
        return squared_distance(points[a], points[x]) <
               squared_distance(points[a], points[y]);
      });
      for (int v : run) {
        taken[static_cast<std::size_t>(v)] = 1;
        ring.push_back(v);
      }
    }
    out.layers.push_back(std::move(ring));
    out.is_cycle.push_back(1);
    std::erase_if(remaining,
                  [&](int v) { return taken[static_cast<std::size_t>(v)] != 0; });
  }
  return out;
}

bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& cycle) {
  const int n = g.order();
  if (n < 3 || static_cast<int>(cycle.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : cycle) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

namespace {

// The ring vertex t such that the whole ring lies left of the ray from->t;
// collinear candidates resolve to the nearest, which is the visible one.
int left_tangent(const PointSet& pts, const std::vector<int>& ring, Point from) {
  int best = -1;
  for (int cand : ring) {
    bool ok = true;
    for (int z : ring) {
      if (z == cand) continue;
      if (orientation(from, pts[cand], pts[z]) < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (best < 0 ||
        squared_distance(from, pts[cand]) < squared_distance(from, pts[best]))
      best = cand;
  }
  if (best < 0) throw std::logic_error("hamiltonian_cycle: tangent not found");
  return best;
}

}  // namespace

std::vector<int> hamiltonian_cycle(const Embedding& e) {
  const int n = e.graph.order();
  if (e.points.size() != n)
    throw std::invalid_argument("hamiltonian_cycle: graph and points disagree");
  if (is_path_graph(e.graph))
    throw std::invalid_argument(
        "hamiltonian_cycle: path graphs have no Hamiltonian cycle");
  const ConvexLayers cl = convex_layers(e.points);
  std::vector<int> cycle = cl.layers[0];

  // cut edge for the next splice, oriented so pj follows pi clockwise
  int pi = -1, pj = -1;
  {
    const std::size_t s = cycle.size();
    for (std::size_t i = 0; i < s; ++i) {
      const int x = cycle[i];
      const int y = cycle[(i + 1) % s];
      const int lo = std::min(x, y), hi = std::max(x, y);
      if (pi < 0 || std::pair(lo, hi) < std::pair(std::min(pi, pj), std::max(pi, pj))) {
        pi = x;
        pj = y;
      }
    }
  }

  for (std::size_t t = 1; t < cl.depth(); ++t) {
    const std::vector<int>& ring = cl.layers[t];
    const std::size_t len = cycle.size();
    std::size_t pos = len;
    for (std::size_t i = 0; i < len; ++i) {
      const int x = cycle[i], y = cycle[(i + 1) % len];
      if ((x == pi && y == pj) || (x == pj && y == pi)) {
        pos = i;
        break;
      }
    }
    if (pos == len)
      throw std::logic_error("hamiltonian_cycle: lost the cut edge");

    std::vector<int> seq;  // runs from the vertex attached to pi to pj's
    int next_pi = -1, next_pj = -1;
    if (cl.is_cycle[t]) {
      const std::size_t s = ring.size();
      std::vector<int> pos_of(static_cast<std::size_t>(n), -1);
      for (std::size_t i = 0; i < s; ++i)
        pos_of[static_cast<std::size_t>(ring[i])] = static_cast<int>(i);
      auto next_cw = [&](int v) {
        return ring[(static_cast<std::size_t>(pos_of[static_cast<std::size_t>(v)]) + 1) % s];
      };
      auto prev_cw = [&](int v) {
        return ring[(static_cast<std::size_t>(pos_of[static_cast<std::size_t>(v)]) + s - 1) % s];
      };
      const int l = left_tangent(e.points, ring, e.points[pi]);
      const int m = left_tangent(e.points, ring, e.points[pj]);
      const int u = (l == m || next_cw(l) == m) ? l : prev_cw(m);
      const int v = next_cw(u);
      seq.push_back(u);
      for (int cur = u; cur != v;) {
        cur = prev_cw(cur);
        seq.push_back(cur);
      }
      next_pi = v;
      next_pj = next_cw(v);
    } else {
      seq = ring;
      const int front = seq.front(), back = seq.back();
      if (e.graph.adjacent(pi, front) && e.graph.adjacent(pj, back)) {
        // already oriented
      } else if (e.graph.adjacent(pi, back) && e.graph.adjacent(pj, front)) {
        std::reverse(seq.begin(), seq.end());
      } else {
        throw std::logic_error(
            "hamiltonian_cycle: cannot attach the innermost path");
      }
    }
    if (cycle[pos] == pj) std::reverse(seq.begin(), seq.end());
    cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                 seq.begin(), seq.end());
    pi = next_pi;
    pj = next_pj;
  }

  if (!is_hamiltonian_cycle(e.graph, cycle))
    throw std::logic_error("hamiltonian_cycle: construction failed to validate");
  return cycle;
}

BlockerBound blocker_bound_check(const Embedding& e, const std::vector<int>& a,
                                 const std::vector<int>& c) {
  const int n = e.graph.order();
  if (a.empty() || c.empty())
    throw std::invalid_argument("blocker_bound_check: both sets must be nonempty");
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_c(static_cast<std::size_t>(n), 0);
  auto admit = [&](int v, std::vector<char>& side) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("blocker_bound_check: vertex out of range");
    if (in_a[static_cast<std::size_t>(v)] || in_c[static_cast<std::size_t>(v)])
      throw std::invalid_argument(
          "blocker_bound_check: the sets must be disjoint and duplicate-free");
    side[static_cast<std::size_t>(v)] = 1;
  };
  for (int v : a) admit(v, in_a);
  for (int v : c) admit(v, in_c);

  std::set<int> b;
  for (int x : a) {
    for (int y : c) {
      if (e.graph.adjacent(x, y))
        throw std::invalid_argument("blocker_bound_check: " + std::to_string(x) +
                                    " sees " + std::to_string(y));
      const std::vector<int> chain = e.blockers.chain(x, y);
      if (chain.empty())
        throw std::invalid_argument(
            "blocker_bound_check: invisible pair without a blocker chain");
      b.insert(chain.begin(), chain.end());
    }
  }
  BlockerBound out;
  out.blockers.assign(b.begin(), b.end());
  out.bound = a.size() + c.size() - 1;
  out.pass = out.blockers.size() >= out.bound;
  return out;
}

bool AuditReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AuditCheck& c) { return c.pass; });
}

const AuditCheck* AuditReport::find(const std::string& name) const {
  for (const AuditCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[static_cast<std::size_t>(v)] < 0) {
          color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (color[static_cast<std::size_t>(v)] ==
                   color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.adjacent(v, w)) return true;
  return false;
}

}  // namespace

AuditReport audit_embedding(const Embedding& e, const AuditOptions& options) {
  AuditReport report;
  auto add = [&report](const char* name, bool pass, std::string witness) {
    report.checks.push_back(
        {name, pass, pass ? std::string() : std::move(witness)});
  };

  const Graph& g = e.graph;
  const int n = g.order();
  if (n == 0 || e.points.size() != n) {
    add("round-trip", false, "graph order and point count disagree");
    return report;
  }

  add("round-trip", verify_embedding(e),
      "graph or blockers differ from the rebuilt visibility structure");
  add("connected", n < 2 || g.is_connected(), "the graph is disconnected");

  const bool path = is_path_graph(g);
  const auto runs = maximal_gsps(e.points);
  const int k = longest_gsp(e.points);
  const long long m = static_cast<long long>(g.size());

  {
    bool pass = true;
    std::string w;
    for (const auto& run : runs) {
      if (static_cast<int>(run.size()) == n) continue;
      std::vector<char> on(static_cast<std::size_t>(n), 0);
      for (int v : run) on[static_cast<std::size_t>(v)] = 1;
      bool found = false;
      for (int v = 0; v < n && !found; ++v) {
        if (on[static_cast<std::size_t>(v)]) continue;
        bool all = true;
        for (int u : run)
          if (!g.adjacent(v, u)) {
            all = false;
            break;
          }
        found = all;
      }
      if (!found) {
        pass = false;
        w = "collinear run " + join(run) + " has no outside common neighbor";
        break;
      }
    }
    add("straight-path-neighbor", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    if (n >= 2) {
      // two points make a maximal straight path only when no longer run
      // holds them both; runs share at most one point, so counting suffices
      long long covered = 0;
      for (const auto& run : runs) {
        const long long len = static_cast<long long>(run.size());
        covered += len * (len - 1) / 2;
      }
      std::set<int> lengths;
      if (covered < static_cast<long long>(n) * (n - 1) / 2) lengths.insert(2);
      for (const auto& run : runs) lengths.insert(static_cast<int>(run.size()));
      for (int len : lengths) {
        const long long need = edge_lower_bound(len, n);
        if (m < need) {
          pass = false;
          w = "a " + std::to_string(len) + "-point run demands " +
              std::to_string(need) + " edges, the graph has " + std::to_string(m);
          break;
        }
      }
    }
    add("edge-count", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    for (const auto& run : runs) {
      const int len = static_cast<int>(run.size());
      std::vector<char> on(static_cast<std::size_t>(n), 0);
      for (int v : run) on[static_cast<std::size_t>(v)] = 1;
      for (int v = 0; v < n && pass; ++v) {
        if (on[static_cast<std::size_t>(v)]) continue;
        if (g.degree(v) < len) {
          pass = false;
          w = "vertex " + std::to_string(v) + " has degree " +
              std::to_string(g.degree(v)) + " beside the run " + join(run);
        }
      }
      if (!pass) break;
    }
    add("off-path-degree", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    if (n >= 2) {
      const int need = min_degree_bound(n, k);
      if (g.min_degree() < need) {
        pass = false;
        w = "minimum degree " + std::to_string(g.min_degree()) + " is below " +
            std::to_string(need) + " for a longest run of " + std::to_string(k);
      }
    }
    add("min-degree", pass, std::move(w));
  }

  const bool complete = m == static_cast<long long>(n) * (n - 1) / 2;
  {
    bool pass = true;
    if (!path && !complete) pass = diameter_at_most(g, 2);
    add("diameter", pass, "some vertex pair is at distance greater than 2");
  }

  {
    bool pass = true;
    std::string w;
    if (!path) {
      for (int root = 0; root < n && pass; ++root) {
        if (bfs_levels(g, root).size() > 3) {
          pass = false;
          w = "the BFS tree rooted at " + std::to_string(root) +
              " has more than 3 levels";
        }
      }
    }
    add("bfs-depth", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    if (!path) {
      for (int v = 0; v < n && pass; ++v) {
        const auto& nb = g.neighbors(v);
        if (nb.size() <= 1) continue;
        if (!g.induced(nb).is_connected()) {
          pass = false;
          w = "the neighborhood of " + std::to_string(v) + " is disconnected";
        }
      }
    }
    add("neighborhood-connectivity", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    if (n >= 2 && n <= options.clique_max_order) {
      const int clique = brute_max_clique(g);
      if (clique > 2 * g.min_degree()) {
        pass = false;
        w = "a clique of " + std::to_string(clique) +
            " exceeds twice the minimum degree " + std::to_string(g.min_degree());
      }
    }
    add("clique-bound", pass, std::move(w));
  }

  add("bipartite-path", is_bipartite(g) == path,
      path ? "a path must be bipartite" : "a bipartite graph must be a path");
  add("triangle-free-path", !has_triangle(g) == path,
      path ? "a path cannot contain a triangle"
           : "a triangle-free graph must be a path");

  {
    bool pass = true;
    std::string w;
    if (!path) {
      try {
        hamiltonian_cycle(e);
      } catch (const std::exception& ex) {
        pass = false;
        w = ex.what();
      }
    }
    add("hamiltonian-cycle", pass, std::move(w));
  }

  {
    bool pass = true;
    std::string w;
    const PairSet inv = invisible_pairs(g);
    if (!inv.empty() && options.blocker_samples > 0) {
      std::mt19937_64 rng(options.seed);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      for (int s = 0; s < options.blocker_samples && pass; ++s) {
        const auto& pick = inv[static_cast<std::size_t>(rng() % inv.size())];
        std::vector<int> a{pick.first}, c{pick.second};
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(pick.first)] = 1;
        used[static_cast<std::size_t>(pick.second)] = 1;
        std::shuffle(order.begin(), order.end(), rng);
        auto sees_none = [&](int v, const std::vector<int>& side) {
          for (int u : side)
            if (g.adjacent(v, u)) return false;
          return true;
        };
        for (int v : order) {
          if (used[static_cast<std::size_t>(v)]) continue;
          const bool a_first = (rng() & 1) != 0;
          if (a_first ? sees_none(v, c) : sees_none(v, a)) {
            (a_first ? a : c).push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
          } else if (a_first ? sees_none(v, a) : sees_none(v, c)) {
            (a_first ? c : a).push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
          }
        }
        try {
          const BlockerBound bb = blocker_bound_check(e, a, c);
          ++report.blocker_samples;
          if (!bb.pass) {
            pass = false;
            w = "only " + std::to_string(bb.blockers.size()) +
                " blockers for A = {" + join(a) + "}, C = {" + join(c) +
                "}, bound " + std::to_string(bb.bound);
          }
        } catch (const std::exception& ex) {
          pass = false;
          w = ex.what();
        }
      }
    }
    add("blocker-count", pass, std::move(w));
  }

  return report;
}

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::found:
      return "found";
    case SearchOutcome::exhausted:
      return "exhausted";
    case SearchOutcome::timeout:
      return "timeout";
  }
  return "unknown";
}

namespace {

struct GridContext {
  int cells = 0;
  std::vector<Point> cell;             // index -> point, lexicographic order
  std::vector<std::vector<int>> syms;  // non-identity cell permutations
};

GridContext make_grid_context(int width, int height) {
  GridContext ctx;
  ctx.cells = width * height;
  ctx.cell.reserve(static_cast<std::size_t>(ctx.cells));
  for (Coord x = 0; x < width; ++x)
    for (Coord y = 0; y < height; ++y) ctx.cell.push_back({x, y});
  auto index_of = [&](Coord x, Coord y) {
    return static_cast<int>(x) * height + static_cast<int>(y);
  };
  std::set<std::vector<int>> seen;
  for (int tr = 0; tr < (width == height ? 2 : 1); ++tr) {
    for (int fx = 0; fx < 2; ++fx) {
      for (int fy = 0; fy < 2; ++fy) {
        std::vector<int> perm(static_cast<std::size_t>(ctx.cells));
        bool identity = true;
        for (int i = 0; i < ctx.cells; ++i) {
          Coord x = ctx.cell[static_cast<std::size_t>(i)].x;
          Coord y = ctx.cell[static_cast<std::size_t>(i)].y;
          if (tr) std::swap(x, y);
          if (fx) x = width - 1 - x;
          if (fy) y = height - 1 - y;
          perm[static_cast<std::size_t>(i)] = index_of(x, y);
          identity = identity && perm[static_cast<std::size_t>(i)] == i;
        }
        if (!identity && seen.insert(perm).second)
          ctx.syms.push_back(std::move(perm));
      }
    }
  }
  return ctx;
}

struct ShardResult {
  bool found = false;
  std::vector<Point> points;
  bool budget_hit = false;
  std::uint64_t nodes = 0;
};

class PlacementSearch {
 public:
  PlacementSearch(const Graph& g, const GridContext& ctx, std::uint64_t quota,
                  std::chrono::steady_clock::time_point deadline)
      : g_(g), ctx_(ctx), quota_(quota), deadline_(deadline) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    pts_.reserve(n);
    active_.resize(n + 1);
  }

  ShardResult run_shard(int first_cell) {
    const std::uint64_t before = nodes_;
    ShardResult out;
    active_[0].clear();
    for (int s = 0; s < static_cast<int>(ctx_.syms.size()); ++s)
      active_[0].push_back(s);
    pts_.clear();
    occupied_ = 0;
    found_.clear();
    if (place(0, first_cell) && dfs(1)) {
      out.found = true;
      out.points = found_;
    }
    pts_.clear();
    occupied_ = 0;
    out.budget_hit = stopped_;
    out.nodes = nodes_ - before;
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool stopped() {
    if (stopped_) return true;
    if (nodes_ >= quota_) stopped_ = true;
    if ((nodes_ & 511) == 0 && std::chrono::steady_clock::now() > deadline_)
      stopped_ = true;
    return stopped_;
  }

  // Checks feasibility of putting the next vertex on cell c and commits the
  // placement; false leaves the state untouched.
  bool place(int depth, int c) {
    const std::size_t d = static_cast<std::size_t>(depth);
    const Point p = ctx_.cell[static_cast<std::size_t>(c)];
    for (int j = 0; j < depth; ++j) {
      bool blocked = false;
      for (int t = 0; t < depth && !blocked; ++t)
        blocked = t != j && strictly_between(pts_[static_cast<std::size_t>(j)],
                                             pts_[static_cast<std::size_t>(t)], p);
      if (g_.adjacent(j, depth)) {
        if (blocked) return false;
      } else if (!blocked) {
        if (depth == g_.order() - 1) return false;
        const Point q = pts_[static_cast<std::size_t>(j)];
        const Coord dx = p.x > q.x ? p.x - q.x : q.x - p.x;
        const Coord dy = p.y > q.y ? p.y - q.y : q.y - p.y;
        if (std::gcd(dx, dy) < 2) return false;
      }
    }
    for (int j = 0; j < depth; ++j)
      for (int t = j + 1; t < depth; ++t)
        if (g_.adjacent(j, t) &&
            strictly_between(pts_[static_cast<std::size_t>(j)], p,
                             pts_[static_cast<std::size_t>(t)]))
          return false;
    ++nodes_;
    occupied_ |= std::uint64_t{1} << c;
    pts_.push_back(p);
    active_[d + 1].clear();
    for (int s : active_[d])
      if (ctx_.syms[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] == c)
        active_[d + 1].push_back(s);
    cells_.resize(d + 1);
    cells_[d] = c;
    return true;
  }

  void unplace() {
    occupied_ &= ~(std::uint64_t{1} << cells_.back());
    pts_.pop_back();
    cells_.pop_back();
  }

  bool dfs(int depth) {
    if (depth == g_.order()) {
      const Embedding emb = build_pvg(PointSet(pts_));
      if (emb.graph == g_) {
        found_ = pts_;
        return true;
      }
      return false;
    }
    const std::size_t d = static_cast<std::size_t>(depth);
    for (int c = 0; c < ctx_.cells; ++c) {
      if (occupied_ & (std::uint64_t{1} << c)) continue;
      if (stopped()) return false;
      bool canonical = true;
      for (int s : active_[d]) {
        if (ctx_.syms[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] < c) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      if (!place(depth, c)) continue;
      if (dfs(depth + 1)) return true;
      unplace();
    }
    return false;
  }

  const Graph& g_;
  const GridContext& ctx_;
  const std::uint64_t quota_;
  const std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::uint64_t occupied_ = 0;
  std::vector<Point> pts_;
  std::vector<int> cells_;
  std::vector<std::vector<int>> active_;
  std::vector<Point> found_;
};

}  // namespace

GridSearchResult grid_search_embedding(const Graph& g, int width, int height,
                                       const GridSearchBudget& budget) {
  const int n = g.order();
  if (n < 1 || n > 10)
    throw std::invalid_argument(
        "grid_search_embedding: order must be between 1 and 10");
  if (width < 1 || height < 1 || width * height > 64)
    throw std::invalid_argument(
        "grid_search_embedding: the grid may have at most 64 cells");
  if (budget.workers < 1)
    throw std::invalid_argument("grid_search_embedding: workers must be positive");

  const auto start = std::chrono::steady_clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(budget.time_limit_seconds));
  GridSearchResult out;
  const GridContext ctx = make_grid_context(width, height);
  if (n > ctx.cells) {
    out.outcome = SearchOutcome::exhausted;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    return out;
  }

  std::vector<int> firsts;
  for (int c = 0; c < ctx.cells; ++c) {
    bool canonical = true;
    for (const auto& perm : ctx.syms)
      if (perm[static_cast<std::size_t>(c)] < c) {
        canonical = false;
        break;
      }
    if (canonical) firsts.push_back(c);
  }

  const int workers =
      std::min(budget.workers, static_cast<int>(firsts.size()));
  const std::uint64_t quota =
      std::max<std::uint64_t>(budget.max_nodes / static_cast<unsigned>(workers), 1);
  std::vector<ShardResult> results(firsts.size());
  std::atomic<int> best_found_shard{INT_MAX};

  auto run_worker = [&](int w) {
    PlacementSearch search(g, ctx, quota, deadline);
    for (int s = w; s < static_cast<int>(firsts.size()); s += workers) {
      if (s > best_found_shard.load(std::memory_order_relaxed)) continue;
      ShardResult r = search.run_shard(firsts[static_cast<std::size_t>(s)]);
      const bool found = r.found;
      const bool hit = r.budget_hit;
      results[static_cast<std::size_t>(s)] = std::move(r);
      if (found) {
        int cur = best_found_shard.load(std::memory_order_relaxed);
        while (s < cur &&
               !best_found_shard.compare_exchange_weak(cur, s,
                                                       std::memory_order_relaxed)) {
        }
        break;
      }
      if (hit) break;
    }
  };

  if (workers <= 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& th : pool) th.join();
  }

  int found_shard = -1;
  bool any_budget_hit = false;
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (results[s].found && found_shard < 0) found_shard = static_cast<int>(s);
    any_budget_hit = any_budget_hit || results[s].budget_hit;
    out.nodes += results[s].nodes;
  }
  if (found_shard >= 0) {
    out.outcome = SearchOutcome::found;
    out.embedding = build_pvg(PointSet(results[static_cast<std::size_t>(found_shard)].points));
  } else if (any_budget_hit) {
    out.outcome = SearchOutcome::timeout;
  } else {
    out.outcome = SearchOutcome::exhausted;
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return out;
}

}  // namespace pvg
