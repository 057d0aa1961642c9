#include "pvg/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pvg {

bool within_coord_limit(Point p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit &&
         p.y <= kCoordLimit;
}

void require_coord_limit(Point p) {
  if (!within_coord_limit(p)) {
    throw std::invalid_argument("point coordinate exceeds 2^30 limit (" +
                                std::to_string(p.x) + ", " +
                                std::to_string(p.y) + ")");
  }
}

Wide cross(Point a, Point b, Point c) {
  return Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
}

Wide squared_distance(Point a, Point b) {
  return Wide(a.x - b.x) * Wide(a.x - b.x) + Wide(a.y - b.y) * Wide(a.y - b.y);
}

int orientation(Point a, Point b, Point c) {
  require_coord_limit(a);
  require_coord_limit(b);
  require_coord_limit(c);
  Wide d = cross(a, b, c);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

bool collinear(Point a, Point b, Point c) { return orientation(a, b, c) == 0; }

bool strictly_between(Point a, Point m, Point b) {
  require_coord_limit(a);
  require_coord_limit(m);
  require_coord_limit(b);
  if (a == b) throw std::invalid_argument("strictly_between: segment endpoints coincide");
  if (cross(a, b, m) != 0) return false;
  // Collinear: m is interior iff it lies forward of a and forward of b along
  // the respective inward directions.
  Wide da = Wide(m.x - a.x) * Wide(b.x - a.x) + Wide(m.y - a.y) * Wide(b.y - a.y);
  Wide db = Wide(m.x - b.x) * Wide(a.x - b.x) + Wide(m.y - b.y) * Wide(a.y - b.y);
  return da > 0 && db > 0;
}

namespace {

// Half 0 covers polar angles [0, pi), half 1 covers [pi, 2*pi).
inline int half_of(Coord dx, Coord dy) {
  if (dy != 0) return dy > 0 ? 0 : 1;
  return dx > 0 ? 0 : 1;
}

}  // namespace

bool angular_less(Point pivot, Point a, Point b) {
  const Coord ax = a.x - pivot.x, ay = a.y - pivot.y;
  const Coord bx = b.x - pivot.x, by = b.y - pivot.y;
  const int ha = half_of(ax, ay), hb = half_of(bx, by);
  if (ha != hb) return ha < hb;
  const Wide cr = Wide(ax) * Wide(by) - Wide(ay) * Wide(bx);
  if (cr != 0) return cr > 0;
  // Same ray: near before far.
  return squared_distance(pivot, a) < squared_distance(pivot, b);
}

std::vector<Point> angular_order(Point pivot, std::span<const Point> others) {
  require_coord_limit(pivot);
  std::vector<Point> out(others.begin(), others.end());
  for (const Point& p : out) {
    require_coord_limit(p);
    if (p == pivot) throw std::invalid_argument("angular_order: pivot occurs among points");
  }
  std::sort(out.begin(), out.end(),
            [&](const Point& a, const Point& b) { return angular_less(pivot, a, b); });
  return out;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (const Point& p : points_) require_coord_limit(p);
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw std::invalid_argument("duplicate point (" + std::to_string(dup->x) +
                                ", " + std::to_string(dup->y) + ")");
  }
}

}  // namespace pvg
