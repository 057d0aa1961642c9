// Exact integer geometry: points, orientation predicates, angular sweeps.
// All predicates are decided with 128-bit integer arithmetic; no floating
// point is used anywhere.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pvg {

using Coord = std::int64_t;
using Wide = __int128;

// Coordinates are capped so that every 3x3 orientation determinant fits in
// 128-bit intermediates with room to spare.
inline constexpr Coord kCoordLimit = Coord{1} << 30;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

bool within_coord_limit(Point p);

// Throws std::invalid_argument when |x| or |y| exceeds kCoordLimit.
void require_coord_limit(Point p);

// Exact cross product (b - a) x (c - a).
Wide cross(Point a, Point b, Point c);

Wide squared_distance(Point a, Point b);

// Sign of cross(a, b, c): +1 when c lies to the left of the directed line
// a->b, -1 to the right, 0 when collinear.
int orientation(Point a, Point b, Point c);

bool collinear(Point a, Point b, Point c);

// True when m lies in the open segment (a, b).  Requires a != b.
bool strictly_between(Point a, Point m, Point b);

// Counterclockwise order around `pivot` starting at direction (+1, 0);
// points sharing a ray are ordered near to far.  `pivot` must not occur in
// `others` and all points must be distinct.
std::vector<Point> angular_order(Point pivot, std::span<const Point> others);

// Comparator backing angular_order, exposed for sweep-style algorithms:
// returns true when (a - pivot) precedes (b - pivot).
bool angular_less(Point pivot, Point a, Point b);

// An immutable, duplicate-free list of points within the coordinate cap.
// Indices into the set are the vertex ids used everywhere else.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

}  // namespace pvg
