#include "pvg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pvg {

namespace {

std::size_t pair_bit(int n, int u, int v) {
  return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(v);
}

}  // namespace

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
}

Graph Graph::from_edges(int n, const PairSet& edges) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  Graph g;
  g.n_ = n;
  g.edges_ = edges;
  std::sort(g.edges_.begin(), g.edges_.end());
  g.adj_.assign(static_cast<size_t>(n), {});
  for (const auto& [u, v] : g.edges_) {
    if (u < 0 || v >= n || u >= v) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") violates 0 <= u < v < n");
    }
  }
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    throw std::invalid_argument("duplicate edge in edge list");
  }
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.has_bits_ = n <= kDenseAdjacencyMaxOrder;
  if (g.has_bits_) {
    g.bits_.assign((static_cast<size_t>(n) * static_cast<size_t>(n) + 63) / 64, 0);
    for (const auto& [u, v] : g.edges_) {
      std::size_t b1 = pair_bit(n, u, v), b2 = pair_bit(n, v, u);
      g.bits_[b1 / 64] |= std::uint64_t{1} << (b1 % 64);
      g.bits_[b2 / 64] |= std::uint64_t{1} << (b2 % 64);
    }
  }
  return g;
}

Graph Graph::path(int n) {
  PairSet e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return from_edges(n, e);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  PairSet e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return from_edges(n, e);
}

Graph Graph::complete(int n) {
  PairSet e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return from_edges(n, e);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (has_bits_) {
    std::size_t b = pair_bit(n_, u, v);
    return (bits_[b / 64] >> (b % 64)) & 1;
  }
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[static_cast<size_t>(v)]) {
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph Graph::complement() const {
  PairSet e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) e.push_back({u, v});
  return from_edges(n_, e);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> index(static_cast<size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (index[static_cast<size_t>(vertices[i])] != -1)
      throw std::invalid_argument("induced: repeated vertex");
    index[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
  }
  PairSet e;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : adj_[static_cast<size_t>(vertices[i])]) {
      int j = index[static_cast<size_t>(w)];
      if (j > static_cast<int>(i)) e.push_back({static_cast<int>(i), j});
    }
  }
  return from_edges(static_cast<int>(vertices.size()), e);
}

Graph Graph::with_edge_toggled(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("cannot toggle a loop");
  if (u > v) std::swap(u, v);
  PairSet e = edges_;
  auto it = std::find(e.begin(), e.end(), VertexPair{u, v});
  if (it != e.end()) {
    e.erase(it);
  } else {
    e.push_back({u, v});
  }
  return from_edges(n_, e);
}

PairSet invisible_pairs(const Graph& g) {
  PairSet out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.push_back({u, v});
  return out;
}

bool is_path_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (g.size() != static_cast<std::size_t>(n - 1)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 2) return false;
  return g.is_connected();
}

bool is_csp(const Graph& g, const std::vector<int>& sequence) {
  const int k = static_cast<int>(sequence.size());
  if (k < 2) return false;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  for (int v : sequence) {
    if (v < 0 || v >= g.order() || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool want = (j == i + 1);
      if (g.adjacent(sequence[static_cast<size_t>(i)], sequence[static_cast<size_t>(j)]) != want)
        return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> chordless_paths(const Graph& g, int u, int w,
                                              int max_interior) {
  if (u == w) throw std::invalid_argument("chordless_paths: endpoints coincide");
  if (u < 0 || u >= g.order() || w < 0 || w >= g.order())
    throw std::invalid_argument("chordless_paths: vertex out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> path{u};
  std::vector<char> on_path(static_cast<size_t>(g.order()), 0);
  on_path[static_cast<size_t>(u)] = 1;

  // Extends `path` one vertex at a time; a candidate must be adjacent to the
  // last vertex and non-adjacent to every earlier one, which keeps every
  // prefix chordless.
  auto dfs = [&](auto&& self) -> void {
    int last = path.back();
    if (path.size() >= 2 && g.adjacent(last, w)) {
      bool chordless_close = true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.adjacent(path[i], w)) {
          chordless_close = false;
          break;
        }
      }
      if (chordless_close) {
        std::vector<int> full = path;
        full.push_back(w);
        out.push_back(std::move(full));
      }
    }
    if (static_cast<int>(path.size()) - 1 >= max_interior) return;
    for (int next : g.neighbors(last)) {
      if (next == w || on_path[static_cast<size_t>(next)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.adjacent(path[i], next)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      path.push_back(next);
      on_path[static_cast<size_t>(next)] = 1;
      self(self);
      on_path[static_cast<size_t>(next)] = 0;
      path.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_levels(const Graph& g, int root) {
  if (root < 0 || root >= g.order()) throw std::invalid_argument("bfs_levels: root out of range");
  std::vector<int> dist(static_cast<size_t>(g.order()), -1);
  std::vector<int> queue{root};
  dist[static_cast<size_t>(root)] = 0;
  std::vector<int> levels{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.neighbors(v)) {
      if (dist[static_cast<size_t>(w)] == -1) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        if (static_cast<int>(levels.size()) <= dist[static_cast<size_t>(w)]) levels.push_back(0);
        ++levels[static_cast<size_t>(dist[static_cast<size_t>(w)])];
        queue.push_back(w);
      }
    }
  }
  return levels;
}

bool diameter_at_most(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> levels = bfs_levels(g, v);
    int reached = std::accumulate(levels.begin(), levels.end(), 0);
    if (reached != g.order()) return false;  // disconnected: infinite diameter
    if (static_cast<int>(levels.size()) - 1 > d) return false;
  }
  return true;
}

namespace {

// Tomita-style maximum clique over 64-bit candidate masks: candidates are
// greedily colored and expanded in reverse color order, pruning branches
// whose color bound cannot beat the incumbent.
struct CliqueSolver {
  int n;
  std::vector<std::uint64_t> adj;
  int best = 0;

  void expand(std::uint64_t cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t rest = cand;
    int color = 0;
    while (rest) {
      ++color;
      std::uint64_t cls = rest;
      while (cls) {
        int v = std::countr_zero(cls);
        std::uint64_t vbit = std::uint64_t{1} << v;
        cls &= ~(adj[static_cast<size_t>(v)] | vbit);
        rest &= ~vbit;
        order.push_back(v);
        bound.push_back(color);
      }
    }
    std::uint64_t live = cand;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[static_cast<size_t>(i)] <= best) return;
      int v = order[static_cast<size_t>(i)];
      expand(live & adj[static_cast<size_t>(v)], size + 1);
      live &= ~(std::uint64_t{1} << v);
    }
  }
};

int max_clique_64(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw std::invalid_argument("brute-force optima are capped at 64 vertices");
  if (n == 0) return 0;
  CliqueSolver s;
  s.n = n;
  s.adj.assign(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    s.adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    s.adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  s.expand(all, 0);
  return s.best;
}

}  // namespace

int brute_max_clique(const Graph& g) { return max_clique_64(g); }

Optima brute_optima(const Graph& g) {
  Optima o;
  o.clique = max_clique_64(g);
  o.independent_set = max_clique_64(g.complement());
  o.vertex_cover = g.order() - o.independent_set;
  return o;
}

long long edge_lower_bound(int k, int n) {
  if (k < 2 || n < k) throw std::invalid_argument("edge_lower_bound requires 2 <= k <= n");
  return static_cast<long long>(k - 1) +
         static_cast<long long>(k) * (static_cast<long long>(n) - k);
}

int planar_vertex_bound(int k) {
  if (k < 4) throw std::invalid_argument("planar_vertex_bound requires k >= 4");
  return k + (2 * k - 5) / (k - 3);
}

int min_degree_bound(long long n, int k) {
  if (k < 2 || n < 1) throw std::invalid_argument("min_degree_bound requires n >= 1, k >= 2");
  if (n == 1) return 0;
  return static_cast<int>((n - 2) / (k - 1) + 1);  // ceil((n-1)/(k-1))
}

namespace {

// Iso-invariant vertex signature: degree plus sorted neighbor degrees.
std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> s{g.degree(v)};
    for (int w : g.neighbors(v)) s.push_back(g.degree(w));
    std::sort(s.begin() + 1, s.end());
    sig[static_cast<size_t>(v)] = std::move(s);
  }
  return sig;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n > 12 || b.order() > 12)
    throw std::invalid_argument("graph_isomorphic is capped at 12 vertices");
  if (n != b.order() || a.size() != b.size()) return std::nullopt;
  auto sig_a = vertex_signatures(a), sig_b = vertex_signatures(b);
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Map the vertices of a in order of rarest signature first.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    if (sig_a[static_cast<size_t>(u)] != sig_a[static_cast<size_t>(v)])
      return sig_a[static_cast<size_t>(u)] > sig_a[static_cast<size_t>(v)];
    return u < v;
  });

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  auto backtrack = [&](auto&& self, int pos) -> bool {
    if (pos == n) return true;
    int va = order[static_cast<size_t>(pos)];
    for (int vb = 0; vb < n; ++vb) {
      if (used[static_cast<size_t>(vb)] || sig_a[static_cast<size_t>(va)] != sig_b[static_cast<size_t>(vb)])
        continue;
      bool ok = true;
      for (int i = 0; i < pos && ok; ++i) {
        int ua = order[static_cast<size_t>(i)];
        ok = a.adjacent(va, ua) == b.adjacent(vb, map[static_cast<size_t>(ua)]);
      }
      if (!ok) continue;
      map[static_cast<size_t>(va)] = vb;
      used[static_cast<size_t>(vb)] = 1;
      if (self(self, pos + 1)) return true;
      map[static_cast<size_t>(va)] = -1;
      used[static_cast<size_t>(vb)] = 0;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return map;
  return std::nullopt;
}

std::uint64_t canonical_key(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_key is capped at 11 vertices");
  if (n <= 1) return 0;
  auto sig = vertex_signatures(g);

  // Fixed signature layout per position: vertices may only occupy positions
  // whose signature class matches, so isomorphic graphs scan identical
  // permutation sets.
  std::vector<std::vector<int>> sorted_sigs(sig.begin(), sig.end());
  std::sort(sorted_sigs.begin(), sorted_sigs.end());

  const int total_bits = n * (n - 1) / 2;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> placed;
  std::vector<char> used(static_cast<size_t>(n), 0);

  // Pair (i, j), i < j, occupies bit j*(j-1)/2 + i counted from the most
  // significant end, so partially placed prefixes compare correctly.
  auto bit_shift = [&](int i, int j) { return total_bits - 1 - (j * (j - 1) / 2 + i); };

  auto dfs = [&](auto&& self, int pos, std::uint64_t key) -> void {
    if (key > best) return;
    if (pos == n) {
      best = std::min(best, key);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)] || sig[static_cast<size_t>(v)] != sorted_sigs[static_cast<size_t>(pos)])
        continue;
      std::uint64_t next = key;
      for (int i = 0; i < pos; ++i)
        if (g.adjacent(placed[static_cast<size_t>(i)], v))
          next |= std::uint64_t{1} << bit_shift(i, pos);
      if (next > best) continue;
      used[static_cast<size_t>(v)] = 1;
      placed.push_back(v);
      self(self, pos + 1, next);
      placed.pop_back();
      used[static_cast<size_t>(v)] = 0;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace pvg
