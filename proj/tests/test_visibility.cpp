#include <doctest.h>

#include <random>

#include "pvg/visibility.hpp"
#include "support.hpp"

using namespace pvg;

namespace {

PointSet grid3x3() {
  std::vector<Point> pts;
  for (Coord y = 0; y < 3; ++y)
    for (Coord x = 0; x < 3; ++x) pts.push_back({x, y});
  return PointSet(pts);  // index = y*3 + x
}

}  // namespace

TEST_CASE("3x3 grid visibility graph") {
  Embedding e = build_pvg(grid3x3());
  CHECK(e.graph.size() == 28);  // 36 pairs minus 8 blocked midpoints
  CHECK(e.blockers.size() == 8);

  // Corners see 5, edge midpoints see 7, the center sees all 8.
  CHECK(e.graph.degree(0) == 5);
  CHECK(e.graph.degree(2) == 5);
  CHECK(e.graph.degree(6) == 5);
  CHECK(e.graph.degree(8) == 5);
  CHECK(e.graph.degree(1) == 7);
  CHECK(e.graph.degree(3) == 7);
  CHECK(e.graph.degree(4) == 8);

  CHECK(e.blockers.chain(0, 2) == std::vector<int>{1});
  CHECK(e.blockers.chain(0, 8) == std::vector<int>{4});
  CHECK(e.blockers.chain(2, 6) == std::vector<int>{4});
  CHECK_FALSE(e.blockers.blocked(0, 4));
  CHECK(verify_embedding(e));
}

TEST_CASE("collinear runs produce oriented blocker chains") {
  PointSet pts({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  Embedding e = build_pvg(pts);
  CHECK(is_path_graph(e.graph));
  CHECK(e.blockers.chain(0, 3) == std::vector<int>{1, 2});
  CHECK(e.blockers.chain(3, 0) == std::vector<int>{2, 1});
  CHECK(e.blockers.chain(0, 2) == std::vector<int>{1});
  CHECK(e.blockers.chain(1, 3) == std::vector<int>{2});
  CHECK_FALSE(e.blockers.blocked(1, 2));
}

TEST_CASE("sweep equals naive construction on random point sets") {
  std::mt19937_64 rng(1618);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + static_cast<int>(rng() % 38);
    PointSet pts = pvgtest::random_point_set(rng, n, 0, 100);
    Embedding fast = build_pvg(pts);
    Embedding slow = build_pvg_naive(pts);
    REQUIRE(fast.graph == slow.graph);
    REQUIRE(fast.blockers == slow.blockers);
  }
}

TEST_CASE("worker count does not change the result") {
  std::mt19937_64 rng(2718);
  PointSet pts = pvgtest::random_point_set(rng, 150, 0, 60);
  Embedding a = build_pvg(pts, 1);
  Embedding b = build_pvg(pts, 4);
  Embedding c = build_pvg(pts, 13);
  CHECK(a.graph == b.graph);
  CHECK(a.blockers == b.blockers);
  CHECK(a.graph == c.graph);
  CHECK(a.blockers == c.blockers);
}

TEST_CASE("degenerate inputs") {
  CHECK(build_pvg(PointSet{}).graph.order() == 0);
  CHECK(build_pvg(PointSet({{5, 5}})).graph.order() == 1);
  Embedding pair = build_pvg(PointSet({{0, 0}, {7, 1}}));
  CHECK(pair.graph.size() == 1);
  CHECK(pair.blockers.size() == 0);
}

TEST_CASE("verify_embedding rejects corrupted structures") {
  Embedding e = build_pvg(grid3x3());
  Embedding bad = e;
  bad.graph = e.graph.with_edge_toggled(0, 2);
  CHECK_FALSE(verify_embedding(bad));

  Embedding bad2 = e;
  bad2.blockers.set(0, 2, {3});
  CHECK_FALSE(verify_embedding(bad2));
}

TEST_CASE("maximal straight runs on the 3x3 grid") {
  auto runs = maximal_gsps(grid3x3());
  CHECK(runs.size() == 8);  // 3 rows, 3 columns, 2 diagonals
  for (const auto& run : runs) CHECK(run.size() == 3);
  CHECK(longest_gsp(grid3x3()) == 3);
}

TEST_CASE("maximal runs are sorted along their line and maximal") {
  PointSet pts({{0, 0}, {3, 0}, {1, 0}, {2, 0}, {5, 7}});
  auto runs = maximal_gsps(pts);
  REQUIRE(runs.size() == 1);
  CHECK(runs[0] == std::vector<int>{0, 2, 3, 1});  // x order along the row
  CHECK(longest_gsp(pts) == 4);

  PointSet general({{0, 0}, {1, 0}, {0, 1}, {2, 3}});
  CHECK(maximal_gsps(general).empty());
  CHECK(longest_gsp(general) == 2);
  CHECK(longest_gsp(PointSet({{1, 2}})) == 1);
}

TEST_CASE("thirteen-point row fixture has the expected blocker structure") {
  PointSet pts = pvgtest::thirteen_point_rows();
  Embedding e = build_pvg(pts);
  CHECK(e.graph.order() == 13);
  CHECK(e.graph.size() == 57);
  CHECK(e.blockers.size() == 21);

  // Rays through the origin: (0,0),(i,1),(2i,2),(3i,3) are collinear.
  CHECK(e.blockers.chain(0, 5) == std::vector<int>{1});
  CHECK(e.blockers.chain(0, 9) == std::vector<int>{1, 5});
  CHECK(e.blockers.chain(1, 9) == std::vector<int>{5});
  CHECK(e.blockers.chain(0, 12) == std::vector<int>{4, 8});

  // Within-row consecutive points are visible, skips are blocked.
  CHECK(e.graph.adjacent(1, 2));
  CHECK(e.blockers.chain(1, 3) == std::vector<int>{2});
  CHECK(e.blockers.chain(9, 12) == std::vector<int>{10, 11});

  // Midpoint blockers across rows 1 and 3.
  CHECK(e.blockers.chain(2, 10) == std::vector<int>{6});
  CHECK(e.graph.adjacent(3, 10));
  CHECK(verify_embedding(e));
}
