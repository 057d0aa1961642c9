// Planar visibility-graph recognition: family templates, the degree-threshold
// recognizer, coordinate reconstruction, and the grid-catalog enumeration.
#include "pvg/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace pvg {

namespace detail {
const std::vector<PointSet>& builtin_catalog_points();
}

namespace {

PlanarClass negative(int n, std::string reason) {
  PlanarClass c;
  c.kind = PlanarKind::not_planar_pvg;
  c.order = n;
  c.reason = std::move(reason);
  return c;
}

bool planar_edge_budget_ok(int n, long long m) { return n <= 2 || m <= 3LL * n - 6; }

// Number of path vertices in a family instance of order n.
int family_path_length(PlanarKind kind, int n) {
  switch (kind) {
    case PlanarKind::family_a:
      return n;
    case PlanarKind::family_b:
      return n - 1;
    default:
      return n - 2;
  }
}

// Family-f instances differ by which interior path vertex the partial apex
// misses; positions p and len-1-p are reflections of each other, so only
// p <= (len-1)/2 yields distinct graphs.
std::vector<int> family_f_positions(int n) {
  std::vector<int> out;
  for (int p = 1; 2 * p <= family_path_length(PlanarKind::family_f, n) - 1; ++p)
    out.push_back(p);
  return out;
}

Graph family_instance(PlanarKind kind, int n, int missed_pos);

// Fills the class fields of a family match given the template-to-input
// vertex map (identity when matched structurally).
PlanarClass family_class(PlanarKind kind, int n, int missed_pos, const std::vector<int>& map) {
  PlanarClass c;
  c.kind = kind;
  c.order = n;
  const int len = family_path_length(kind, n);
  c.path.reserve(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) c.path.push_back(map[static_cast<std::size_t>(j)]);
  if (kind != PlanarKind::family_a) c.apex1 = map[static_cast<std::size_t>(len)];
  if (kind != PlanarKind::family_a && kind != PlanarKind::family_b)
    c.apex2 = map[static_cast<std::size_t>(len + 1)];
  if (kind == PlanarKind::family_e) c.missed = c.path.front();
  if (kind == PlanarKind::family_f) c.missed = c.path[static_cast<std::size_t>(missed_pos)];
  return c;
}

PlanarClass classify_small(const Graph& g) {
  const int n = g.order();
  for (PlanarKind kind : {PlanarKind::family_a, PlanarKind::family_b, PlanarKind::family_c,
                          PlanarKind::family_d, PlanarKind::family_e, PlanarKind::family_f}) {
    if (n < family_min_order(kind)) continue;
    const std::vector<int> positions =
        kind == PlanarKind::family_f ? family_f_positions(n) : std::vector<int>{1};
    for (int p : positions)
      if (const auto map = graph_isomorphic(family_instance(kind, n, p), g))
        return family_class(kind, n, p, *map);
  }
  for (const CatalogEntry& entry : builtin_catalog().entries) {
    if (entry.graph.order() != n) continue;
    if (auto map = graph_isomorphic(entry.graph, g)) {
      PlanarClass c;
      c.kind = PlanarKind::particular;
      c.order = n;
      c.particular_id = entry.id;
      c.bijection = std::move(*map);
      return c;
    }
  }
  return negative(n, "matches no family instance or catalog graph");
}

PlanarClass classify_large(const Graph& g) {
  const int n = g.order();
  std::vector<int> apexes;
  for (int v = 0; v < n && apexes.size() <= 3; ++v)
    if (g.degree(v) >= n - 3) apexes.push_back(v);
  if (apexes.size() > 2) return negative(n, "more than two high-degree vertices");

  std::vector<char> is_apex(static_cast<std::size_t>(n), 0);
  for (int a : apexes) is_apex[static_cast<std::size_t>(a)] = 1;

  // The remaining vertices must induce a chordless path: internal degrees in
  // {1, 2} with exactly two ends, and one end-to-end walk covering them all.
  std::vector<int> ends;
  std::size_t internal_two = 0;
  const std::size_t rest = static_cast<std::size_t>(n) - apexes.size();
  for (int v = 0; v < n; ++v) {
    if (is_apex[static_cast<std::size_t>(v)]) continue;
    int d = 0;
    for (int u : g.neighbors(v)) d += !is_apex[static_cast<std::size_t>(u)];
    if (d == 1)
      ends.push_back(v);
    else if (d == 2)
      ++internal_two;
    else
      return negative(n, "non-apex vertices do not induce a path");
  }
  if (ends.size() != 2 || internal_two + 2 != rest)
    return negative(n, "non-apex vertices do not induce a path");

  std::vector<int> path;
  path.reserve(rest);
  int prev = -1, cur = std::min(ends[0], ends[1]);
  while (cur != -1) {
    path.push_back(cur);
    int next = -1;
    for (int u : g.neighbors(cur))
      if (!is_apex[static_cast<std::size_t>(u)] && u != prev) next = u;
    prev = cur;
    cur = next;
  }
  if (path.size() != rest) return negative(n, "non-apex vertices do not induce a path");

  if (apexes.empty()) {
    PlanarClass c;
    c.kind = PlanarKind::family_a;
    c.order = n;
    c.path = std::move(path);
    return c;
  }

  if (apexes.size() == 1) {
    if (g.degree(apexes[0]) != n - 1) return negative(n, "apex misses a path vertex");
    PlanarClass c;
    c.kind = PlanarKind::family_b;
    c.order = n;
    c.path = std::move(path);
    c.apex1 = apexes[0];
    return c;
  }

  const int u = apexes[0], v = apexes[1];
  const int du = g.degree(u), dv = g.degree(v);
  if (!g.adjacent(u, v)) {
    if (du != n - 2 || dv != n - 2)
      return negative(n, "non-adjacent apexes do not cover the path");
    PlanarClass c;
    c.kind = PlanarKind::family_d;
    c.order = n;
    c.path = std::move(path);
    c.apex1 = u;
    c.apex2 = v;
    return c;
  }

  if (du == n - 1 && dv == n - 1) {
    PlanarClass c;
    c.kind = PlanarKind::family_c;
    c.order = n;
    c.path = std::move(path);
    c.apex1 = u;
    c.apex2 = v;
    return c;
  }

  const int full = du == n - 1 ? u : (dv == n - 1 ? v : -1);
  if (full < 0) return negative(n, "adjacent apexes without a full apex");
  const int partial = full == u ? v : u;
  if (g.degree(partial) != n - 2) return negative(n, "partial apex misses more than one vertex");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(partial)] = 1;
  for (int w : g.neighbors(partial)) seen[static_cast<std::size_t>(w)] = 1;
  int missed = -1;
  for (int w = 0; w < n; ++w)
    if (!seen[static_cast<std::size_t>(w)]) missed = w;
  if (missed < 0 || is_apex[static_cast<std::size_t>(missed)])
    return negative(n, "partial apex misses no path vertex");

  PlanarClass c;
  c.order = n;
  c.path = std::move(path);
  c.apex1 = full;
  c.apex2 = partial;
  c.missed = missed;
  if (missed == c.path.front() || missed == c.path.back()) {
    if (missed == c.path.back()) std::reverse(c.path.begin(), c.path.end());
    c.kind = PlanarKind::family_e;
  } else {
    c.kind = PlanarKind::family_f;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Grid enumeration.

// The eight signed/swapped images of a point under the grid symmetries;
// translation is normalized away separately.
Point transform_point(Point p, int t) {
  const Coord x = p.x, y = p.y;
  switch (t) {
    case 0: return {x, y};
    case 1: return {-x, y};
    case 2: return {x, -y};
    case 3: return {-x, -y};
    case 4: return {y, x};
    case 5: return {-y, x};
    case 6: return {y, -x};
    default: return {-y, -x};
  }
}

std::vector<Point> normalized(std::vector<Point> pts) {
  Coord minx = pts[0].x, miny = pts[0].y;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
  }
  for (Point& p : pts) {
    p.x -= minx;
    p.y -= miny;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// True when the subset's own normalized form is the lexicographic minimum
// over all eight symmetries; exactly one member of each symmetry class on a
// square grid qualifies.
bool canonical_under_symmetry(const std::vector<Point>& pts) {
  const std::vector<Point> base = normalized(pts);
  std::vector<Point> image(pts.size());
  for (int t = 1; t < 8; ++t) {
    for (std::size_t i = 0; i < pts.size(); ++i) image[i] = transform_point(pts[i], t);
    if (normalized(image) < base) return false;
  }
  return true;
}

struct GridTables {
  int width = 0, height = 0, cells = 0;
  std::vector<Point> point;                    // cell id (row-major) -> point
  std::vector<std::vector<std::uint64_t>> between;  // cells strictly between
  std::vector<std::uint64_t> forced;           // cells with nothing between

  GridTables(int w, int h) : width(w), height(h), cells(w * h) {
    point.resize(static_cast<std::size_t>(cells));
    for (int c = 0; c < cells; ++c) point[static_cast<std::size_t>(c)] = {c % w, c / w};
    between.assign(static_cast<std::size_t>(cells),
                   std::vector<std::uint64_t>(static_cast<std::size_t>(cells), 0));
    forced.assign(static_cast<std::size_t>(cells), 0);
    for (int a = 0; a < cells; ++a)
      for (int b = 0; b < cells; ++b) {
        if (a == b) continue;
        std::uint64_t mask = 0;
        for (int m = 0; m < cells; ++m)
          if (m != a && m != b &&
              strictly_between(point[static_cast<std::size_t>(a)],
                               point[static_cast<std::size_t>(m)],
                               point[static_cast<std::size_t>(b)]))
            mask |= std::uint64_t{1} << m;
        between[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mask;
        if (mask == 0 && b != a)
          forced[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      }
  }
};

// One planar class met during the scan.  `gsp` is the smallest longest
// collinear run over the embeddings seen so far, and the representative
// points are the lexicographically least among the embeddings achieving it,
// so results are independent of worker count and shard order.
struct FoundClass {
  Graph graph;
  std::vector<Point> points;
  int gsp = 0;

  bool better_than(const FoundClass& other) const {
    return gsp < other.gsp || (gsp == other.gsp && points < other.points);
  }
};

struct ShardResult {
  std::map<std::pair<int, std::uint64_t>, FoundClass> found;
  std::uint64_t subsets_seen = 0;
  bool complete = true;
};

// Enumerates size-n subsets whose first cell is congruent to `shard` modulo
// `stride`, pruning on the count of pairs that are visible no matter which
// other cells are chosen.
class SubsetScan {
 public:
  SubsetScan(const GridTables& grid, int n, std::uint64_t max_subsets,
             std::chrono::steady_clock::time_point deadline, ShardResult& out)
      : grid_(grid),
        n_(n),
        budget_m_(3 * n - 6),
        max_subsets_(max_subsets),
        deadline_(deadline),
        out_(out) {
    chosen_.reserve(static_cast<std::size_t>(n));
  }

  void run(int shard, int stride) {
    // The first (lowest-index) cell of a qualifying subset always lies on the
    // bottom row, since the subset must touch the bottom edge.
    for (int first = shard; first < grid_.cells && !stop_; first += stride) {
      if (grid_.point[static_cast<std::size_t>(first)].y != 0) continue;
      chosen_.assign(1, first);
      mask_ = std::uint64_t{1} << first;
      descend(first + 1, 0);
    }
  }

 private:
  void descend(int from, int forced_edges) {
    if (static_cast<int>(chosen_.size()) == n_) {
      process();
      return;
    }
    const int need = n_ - static_cast<int>(chosen_.size());
    for (int c = from; c + need <= grid_.cells && !stop_; ++c) {
      const int add =
          std::popcount(grid_.forced[static_cast<std::size_t>(c)] & mask_);
      if (forced_edges + add > budget_m_) continue;
      chosen_.push_back(c);
      mask_ |= std::uint64_t{1} << c;
      descend(c + 1, forced_edges + add);
      mask_ &= ~(std::uint64_t{1} << c);
      chosen_.pop_back();
    }
  }

  void process() {
    if (++out_.subsets_seen >= max_subsets_) stop_ = true;
    if ((out_.subsets_seen & 0x1fff) == 0 &&
        std::chrono::steady_clock::now() >= deadline_)
      stop_ = true;
    if (stop_) {
      out_.complete = false;
      return;
    }

    // Translation dedupe: the subset must touch the left and bottom edges.
    Coord minx = grid_.point[static_cast<std::size_t>(chosen_[0])].x;
    for (int c : chosen_) minx = std::min(minx, grid_.point[static_cast<std::size_t>(c)].x);
    if (minx != 0 || grid_.point[static_cast<std::size_t>(chosen_[0])].y != 0) return;

    PairSet edges;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const auto a = static_cast<std::size_t>(chosen_[static_cast<std::size_t>(i)]);
        const auto b = static_cast<std::size_t>(chosen_[static_cast<std::size_t>(j)]);
        if ((grid_.between[a][b] & mask_) == 0) {
          if (static_cast<int>(edges.size()) == budget_m_) return;
          edges.push_back({i, j});
        }
      }

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n_));
    for (int c : chosen_) pts.push_back(grid_.point[static_cast<std::size_t>(c)]);
    if (!canonical_under_symmetry(pts)) return;

    const Graph g = Graph::from_edges(n_, edges);
    const std::uint64_t key = canonical_key(g);
    const auto map_key = std::make_pair(n_, key);
    const auto it = out_.found.find(map_key);
    if (it == out_.found.end()) {
      if (rejected_.contains(key)) return;
      if (!is_planar_graph(g)) {
        rejected_.insert(key);
        return;
      }
    }
    const int gsp = longest_gsp(PointSet(pts));
    FoundClass cls{g, std::move(pts), gsp};
    if (it != out_.found.end()) {
      if (cls.better_than(it->second)) it->second = std::move(cls);
      return;
    }
    out_.found.emplace(map_key, std::move(cls));
  }

  const GridTables& grid_;
  int n_;
  int budget_m_;
  std::uint64_t max_subsets_;
  std::chrono::steady_clock::time_point deadline_;
  ShardResult& out_;
  std::vector<int> chosen_;
  std::uint64_t mask_ = 0;
  std::set<std::uint64_t> rejected_;
  bool stop_ = false;
};

}  // namespace

const char* to_string(PlanarKind kind) {
  switch (kind) {
    case PlanarKind::family_a: return "FamilyA";
    case PlanarKind::family_b: return "FamilyB";
    case PlanarKind::family_c: return "FamilyC";
    case PlanarKind::family_d: return "FamilyD";
    case PlanarKind::family_e: return "FamilyE";
    case PlanarKind::family_f: return "FamilyF";
    case PlanarKind::particular: return "Particular";
    case PlanarKind::not_planar_pvg: return "NotPlanarPVG";
  }
  return "?";
}

int family_min_order(PlanarKind kind) {
  switch (kind) {
    case PlanarKind::family_a: return 1;
    case PlanarKind::family_b:
    case PlanarKind::family_c:
    case PlanarKind::family_d:
    case PlanarKind::family_e: return 3;
    case PlanarKind::family_f: return 5;
    default: throw std::invalid_argument("family_min_order: not a family kind");
  }
}

Graph family_template(PlanarKind kind, int n) { return family_instance(kind, n, 1); }

namespace {

Graph family_instance(PlanarKind kind, int n, int missed_pos) {
  if (kind == PlanarKind::particular || kind == PlanarKind::not_planar_pvg)
    throw std::invalid_argument("family_template: not a family kind");
  if (n < family_min_order(kind))
    throw std::invalid_argument("family_template: order below the family minimum");
  const int len = family_path_length(kind, n);
  PairSet edges;
  for (int j = 0; j + 1 < len; ++j) edges.push_back({j, j + 1});
  switch (kind) {
    case PlanarKind::family_a:
      break;
    case PlanarKind::family_b:
      for (int j = 0; j < len; ++j) edges.push_back({j, n - 1});
      break;
    case PlanarKind::family_c:
    case PlanarKind::family_d:
      for (int j = 0; j < len; ++j) {
        edges.push_back({j, n - 2});
        edges.push_back({j, n - 1});
      }
      if (kind == PlanarKind::family_c) edges.push_back({n - 2, n - 1});
      break;
    case PlanarKind::family_e:
    case PlanarKind::family_f: {
      const int skip = kind == PlanarKind::family_e ? 0 : missed_pos;
      if (kind == PlanarKind::family_f && (skip < 1 || skip > len - 2))
        throw std::invalid_argument("family_template: missed vertex must be a path interior");
      for (int j = 0; j < len; ++j) {
        edges.push_back({j, n - 2});
        if (j != skip) edges.push_back({j, n - 1});
      }
      edges.push_back({n - 2, n - 1});
      break;
    }
    default:
      break;
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

PlanarClass classify(const Graph& g) {
  const int n = g.order();
  if (n == 0) return negative(0, "empty graph");
  if (n == 1) {
    PlanarClass c;
    c.kind = PlanarKind::family_a;
    c.order = 1;
    c.path = {0};
    return c;
  }
  if (!g.is_connected()) return negative(n, "disconnected");
  if (!planar_edge_budget_ok(n, g.size()))
    return negative(n, "exceeds the planar edge budget");
  return n <= 8 ? classify_small(g) : classify_large(g);
}

Embedding reconstruct(const PlanarClass& c) {
  if (!c.positive()) throw std::invalid_argument("reconstruct: negative classification");
  const int n = c.order;
  if (n < 1) throw std::invalid_argument("reconstruct: empty class");
  std::vector<Point> pts(static_cast<std::size_t>(n), Point{-1, -1});
  auto place = [&](int v, Coord x, Coord y) {
    if (v < 0 || v >= n || pts[static_cast<std::size_t>(v)] != Point{-1, -1})
      throw std::invalid_argument("reconstruct: malformed class parameters");
    pts[static_cast<std::size_t>(v)] = {x, y};
  };

  if (c.kind == PlanarKind::particular) {
    const auto& entries = builtin_catalog().entries;
    if (c.particular_id < 1 || c.particular_id > static_cast<int>(entries.size()))
      throw std::invalid_argument("reconstruct: unknown catalog id");
    const CatalogEntry& entry = entries[static_cast<std::size_t>(c.particular_id - 1)];
    if (static_cast<int>(c.bijection.size()) != n || entry.graph.order() != n)
      throw std::invalid_argument("reconstruct: malformed class parameters");
    for (int j = 0; j < n; ++j) {
      const Point p = entry.points[j];
      place(c.bijection[static_cast<std::size_t>(j)], p.x, p.y);
    }
    return build_pvg(PointSet(std::move(pts)));
  }

  const int len = family_path_length(c.kind, n);
  if (static_cast<int>(c.path.size()) != len)
    throw std::invalid_argument("reconstruct: malformed class parameters");
  for (int j = 0; j < len; ++j) place(c.path[static_cast<std::size_t>(j)], j, 0);
  switch (c.kind) {
    case PlanarKind::family_a:
      break;
    case PlanarKind::family_b:
      place(c.apex1, 0, 1);
      break;
    case PlanarKind::family_c:
      place(c.apex1, 0, 1);
      place(c.apex2, 1, 1);
      break;
    case PlanarKind::family_d:
      if (len < 2) throw std::invalid_argument("reconstruct: malformed class parameters");
      place(c.apex1, 1, 1);
      place(c.apex2, 1, -1);
      break;
    case PlanarKind::family_e:
      if (c.missed != c.path.front())
        throw std::invalid_argument("reconstruct: malformed class parameters");
      place(c.apex1, 0, 1);
      place(c.apex2, 0, 2);
      break;
    case PlanarKind::family_f: {
      const auto it = std::find(c.path.begin(), c.path.end(), c.missed);
      const auto p = it - c.path.begin();
      if (it == c.path.end() || p == 0 || p + 1 == len)
        throw std::invalid_argument("reconstruct: malformed class parameters");
      place(c.apex1, static_cast<Coord>(p), 1);
      place(c.apex2, static_cast<Coord>(p), 2);
      break;
    }
    default:
      break;
  }
  return build_pvg(PointSet(std::move(pts)));
}

std::optional<Embedding> recognize_and_reconstruct(const Graph& g) {
  const PlanarClass c = classify(g);
  if (!c.positive()) return std::nullopt;
  Embedding e = reconstruct(c);
  if (!(e.graph == g)) throw std::logic_error("reconstruction does not round-trip");
  return e;
}

bool is_planar_graph(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return true;
  if (!planar_edge_budget_ok(n, g.size())) return false;
  boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(
      static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges())
    boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

int Catalog::classes_of(int n) const {
  int count = 0;
  for (const CatalogEntry& e : entries) count += e.graph.order() == n;
  return count;
}

Catalog build_catalog(int width, int height, const CatalogBudget& budget) {
  if (width < 2 || height < 2 || width * height > 64)
    throw std::invalid_argument("build_catalog: grid must have 4..64 cells");
  const GridTables grid(width, height);
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(budget.time_limit_seconds));
  const int workers = std::max(1, budget.workers);

  Catalog catalog;
  catalog.width = width;
  catalog.height = height;

  for (int n : budget.sizes) {
    if (n < 3 || n > grid.cells)
      throw std::invalid_argument("build_catalog: subset size out of range");
    std::set<std::uint64_t> family_keys;
    for (PlanarKind kind : {PlanarKind::family_a, PlanarKind::family_b, PlanarKind::family_c,
                            PlanarKind::family_d, PlanarKind::family_e, PlanarKind::family_f}) {
      if (n < family_min_order(kind)) continue;
      const std::vector<int> positions =
          kind == PlanarKind::family_f ? family_f_positions(n) : std::vector<int>{1};
      for (int p : positions) family_keys.insert(canonical_key(family_instance(kind, n, p)));
    }

    std::vector<ShardResult> results(static_cast<std::size_t>(workers));
    auto scan_shard = [&](int shard) {
      SubsetScan scan(grid, n, budget.max_subsets, deadline,
                      results[static_cast<std::size_t>(shard)]);
      scan.run(shard, workers);
    };
    if (workers == 1) {
      scan_shard(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int s = 0; s < workers; ++s) threads.emplace_back(scan_shard, s);
      for (std::thread& t : threads) t.join();
    }

    std::map<std::pair<int, std::uint64_t>, FoundClass> merged;
    for (ShardResult& r : results) {
      catalog.subsets_seen += r.subsets_seen;
      catalog.complete = catalog.complete && r.complete;
      for (auto& [key, cls] : r.found) {
        const auto it = merged.find(key);
        if (it == merged.end())
          merged.emplace(key, std::move(cls));
        else if (cls.better_than(it->second))
          it->second = std::move(cls);
      }
    }
    // A class earns an entry when some embedding keeps every collinear run
    // at three points, or when its shape matches no family instance.  Family
    // shapes that always need a longer run belong to their family.
    for (auto& [key, cls] : merged) {
      if (cls.gsp > 3 && family_keys.contains(key.second)) continue;
      CatalogEntry entry;
      entry.id = static_cast<int>(catalog.entries.size()) + 1;
      entry.graph = std::move(cls.graph);
      entry.points = PointSet(std::move(cls.points));
      entry.key = key.second;
      entry.gsp = cls.gsp;
      catalog.entries.push_back(std::move(entry));
    }
  }
  return catalog;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog = [] {
    Catalog c;
    c.width = 7;
    c.height = 7;
    const auto& frozen = detail::builtin_catalog_points();
    std::vector<CatalogEntry> entries;
    for (const PointSet& pts : frozen) {
      CatalogEntry e;
      e.graph = build_pvg(pts).graph;
      e.points = pts;
      e.key = canonical_key(e.graph);
      e.gsp = longest_gsp(pts);
      entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      return std::make_pair(a.graph.order(), a.key) < std::make_pair(b.graph.order(), b.key);
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      entries[i].id = static_cast<int>(i) + 1;
      c.entries.push_back(std::move(entries[i]));
    }
    return c;
  }();
  return catalog;
}

}  // namespace pvg
