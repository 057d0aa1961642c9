#include "pvg/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pvg/geometry.hpp"

namespace pvg {

namespace {

// The base graph plus `added` universal vertices appended after it.
Graph with_universal_vertices(const Graph& g, int added) {
  const int n = g.order();
  PairSet edges = g.edges();
  for (int b = n; b < n + added; ++b)
    for (int u = 0; u < b; ++u) edges.push_back({u, b});
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n + added, edges);
}

// True when `b` may join `pts` as the blocker of the pair {i, j}: it is
// collinear with no two existing points other than p_i and p_j, it lies
// strictly inside no other existing segment, and no existing point hides
// another existing point from it.
bool admissible_blocker(const std::vector<Point>& pts, int i, int j, Point b) {
  const int m = static_cast<int>(pts.size());
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (u == i && v == j) continue;
      if (collinear(pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)], b)) return false;
      if (strictly_between(pts[static_cast<size_t>(u)], b, pts[static_cast<size_t>(v)]))
        return false;
      if (strictly_between(b, pts[static_cast<size_t>(u)], pts[static_cast<size_t>(v)]))
        return false;
      if (strictly_between(b, pts[static_cast<size_t>(v)], pts[static_cast<size_t>(u)]))
        return false;
    }
  }
  return true;
}

// Parabola points scaled by D, then one blocker per non-edge at the
// smallest admissible parameter a/D.  Empty when some non-edge admits no
// parameter or a coordinate would leave the representable range.
std::vector<Point> place_points(const Graph& g, const PairSet& holes, long long d) {
  const int n = g.order();
  const long long scale = holes.empty() ? 1 : d;
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n) + holes.size());
  for (long long i = 0; i < n; ++i) {
    const Point p{scale * i, scale * i * i};
    if (!within_coord_limit(p)) return {};
    pts.push_back(p);
  }
  for (const auto& [i, j] : holes) {
    const Point pi = pts[static_cast<size_t>(i)];
    const Point pj = pts[static_cast<size_t>(j)];
    const Coord step_x = (pj.x - pi.x) / d;
    const Coord step_y = (pj.y - pi.y) / d;
    bool placed = false;
    for (long long a = 1; a < d && !placed; ++a) {
      const Point b{pi.x + a * step_x, pi.y + a * step_y};
      if (!within_coord_limit(b)) return {};
      if (!admissible_blocker(pts, i, j, b)) continue;
      pts.push_back(b);
      placed = true;
    }
    if (!placed) return {};
  }
  return pts;
}

std::string coordinate_var(char axis, int i) {
  return std::string(1, axis) + "_" + std::to_string(i);
}

std::string t_var(int i, int j, int k) {
  return "t_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string difference(char axis, int k, int i) {
  return "(- " + coordinate_var(axis, k) + " " + coordinate_var(axis, i) + ")";
}

// x_k - x_i = t * (x_j - x_i) on the given axis.
std::string parametrization(char axis, int i, int j, int k) {
  return "(= " + difference(axis, k, i) + " (* " + t_var(i, j, k) + " " +
         difference(axis, j, i) + "))";
}

// Orientation determinant of (p_i, p_j, p_k).
std::string determinant(int i, int j, int k) {
  return "(- (* " + difference('x', j, i) + " " + difference('y', k, i) + ") (* " +
         difference('y', j, i) + " " + difference('x', k, i) + "))";
}

std::string combine(const std::string& op, const std::vector<std::string>& parts) {
  if (parts.size() == 1) return parts.front();
  std::string out = "(" + op;
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

}  // namespace

Gadget build_gadget(const Graph& g) {
  const int n = g.order();
  if (n < 1 || n > 12)
    throw std::invalid_argument("build_gadget: graph order must be between 1 and 12");

  Gadget out;
  out.base = g;
  const PairSet holes = invisible_pairs(g);
  out.added = static_cast<int>(holes.size());
  out.injection.resize(static_cast<size_t>(n));
  std::iota(out.injection.begin(), out.injection.end(), 0);
  out.extended = with_universal_vertices(g, out.added);

  const long long total = n + out.added;
  long long d = 2 * total * total + 1;
  std::string tried;
  for (int attempt = 0; attempt < 6; ++attempt, d = 2 * d + 1) {
    if (!tried.empty()) tried += ", ";
    tried += std::to_string(d);
    std::vector<Point> pts = place_points(g, holes, d);
    if (pts.empty()) continue;
    Embedding e = build_pvg(PointSet(std::move(pts)));
    if (e.graph != out.extended) continue;
    out.embedding = std::move(e);
    return out;
  }
  throw std::runtime_error("build_gadget: no verified embedding with denominators " + tried);
}

std::string EtrFormula::smt2() const {
  std::string out = "(set-logic QF_NRA)\n";
  for (const auto& v : coordinate_variables) out += "(declare-const " + v + " Real)\n";
  for (const auto& v : t_variables) out += "(declare-const " + v + " Real)\n";
  for (const auto& a : assertions) out += "(assert " + a + ")\n";
  out += "(check-sat)\n";
  return out;
}

EtrFormula emit_etr(const Graph& g, bool strict_compat) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("emit_etr: graph must have at least 2 vertices");

  EtrFormula f;
  f.order = n;
  f.strict_compat = strict_compat;
  for (int i = 0; i < n; ++i) {
    f.coordinate_variables.push_back(coordinate_var('x', i));
    f.coordinate_variables.push_back(coordinate_var('y', i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (k != i && k != j) f.t_variables.push_back(t_var(i, j, k));

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      f.assertions.push_back("(not (and (= " + coordinate_var('x', i) + " " +
                             coordinate_var('x', j) + ") (= " + coordinate_var('y', i) + " " +
                             coordinate_var('y', j) + ")))");

  const std::string below = strict_compat ? "(- 1)" : "0";
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<std::string> parts;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const std::string t = t_var(i, j, k);
        if (g.adjacent(i, j)) {
          parts.push_back("(or (> " + determinant(i, j, k) + " 0) (< " + determinant(i, j, k) +
                          " 0) (and (or (< " + t + " " + below + ") (> " + t + " 1)) " +
                          parametrization('x', i, j, k) + " " + parametrization('y', i, j, k) +
                          "))");
        } else {
          parts.push_back("(and (< 0 " + t + ") (< " + t + " 1) " +
                          parametrization('x', i, j, k) + " " + parametrization('y', i, j, k) +
                          ")");
        }
      }
      if (g.adjacent(i, j)) {
        if (!parts.empty()) f.assertions.push_back(combine("and", parts));
      } else {
        f.assertions.push_back(parts.empty() ? "false" : combine("or", parts));
      }
    }
  }
  return f;
}

bool eval_etr(const Graph& g, const PointSet& points) {
  const int n = g.order();
  if (points.size() != n)
    throw std::invalid_argument("eval_etr: point count differs from vertex count");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool blocked = false;
      for (int k = 0; k < n && !blocked; ++k)
        if (k != i && k != j) blocked = strictly_between(points[i], points[k], points[j]);
      if (blocked == g.adjacent(i, j)) return false;
    }
  }
  return true;
}

}  // namespace pvg
