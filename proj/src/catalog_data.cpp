// Frozen output of build_catalog(7, 7): witness coordinates for the sporadic
// planar visibility graphs.  Entries are ordered by (order, canonical key);
// the first four are realizable with no four collinear points, the fifth
// needs one run of four.
#include <vector>

#include "pvg/geometry.hpp"

namespace pvg::detail {

const std::vector<PointSet>& builtin_catalog_points() {
  static const std::vector<PointSet> points = {
      PointSet({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 4}}),
      PointSet({{0, 0}, {0, 2}, {1, 2}, {2, 2}, {3, 3}, {5, 4}}),
      PointSet({{0, 0}, {0, 1}, {0, 2}, {2, 2}, {3, 2}, {6, 4}}),
      PointSet({{0, 0}, {0, 1}, {0, 2}, {2, 2}, {3, 2}, {3, 3}, {6, 4}}),
      PointSet({{0, 0}, {0, 1}, {0, 2}, {1, 2}, {4, 2}, {2, 4}, {0, 6}}),
  };
  return points;
}

}  // namespace pvg::detail
