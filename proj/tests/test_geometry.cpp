#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "pvg/geometry.hpp"

using namespace pvg;

namespace {

// Independent check: 3x3 determinant by cofactor expansion in arbitrary
// precision, a different algebraic route than the implementation's.
int oracle_orientation(Point a, Point b, Point c) {
  using boost::multiprecision::cpp_int;
  cpp_int d = cpp_int(a.x) * (cpp_int(b.y) - cpp_int(c.y)) -
              cpp_int(a.y) * (cpp_int(b.x) - cpp_int(c.x)) +
              (cpp_int(b.x) * cpp_int(c.y) - cpp_int(b.y) * cpp_int(c.x));
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

}  // namespace

TEST_CASE("orientation signs on canonical triples") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orientation({0, 0}, {2, 1}, {4, 2}) == 0);
}

TEST_CASE("orientation matches arbitrary-precision determinant") {
  std::mt19937_64 rng(20240801);
  std::uniform_int_distribution<Coord> d(-kCoordLimit, kCoordLimit);
  for (int t = 0; t < 20000; ++t) {
    Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    CHECK(orientation(a, b, c) == oracle_orientation(a, b, c));
  }
  // Collinear triples at the coordinate cap.
  CHECK(orientation({-kCoordLimit, -kCoordLimit}, {0, 0}, {kCoordLimit, kCoordLimit}) == 0);
  CHECK(orientation({-kCoordLimit, kCoordLimit}, {0, 0}, {kCoordLimit, -kCoordLimit}) == 0);
}

TEST_CASE("orientation rejects out-of-range coordinates") {
  CHECK_THROWS_AS(orientation({kCoordLimit + 1, 0}, {0, 0}, {1, 1}), std::invalid_argument);
  CHECK_NOTHROW(orientation({kCoordLimit, 0}, {0, 0}, {1, 1}));
}

TEST_CASE("strictly_between") {
  CHECK(strictly_between({0, 0}, {1, 1}, {2, 2}));
  CHECK(strictly_between({0, 0}, {2, 1}, {4, 2}));
  CHECK_FALSE(strictly_between({0, 0}, {0, 0}, {2, 2}));  // endpoint
  CHECK_FALSE(strictly_between({0, 0}, {2, 2}, {2, 2}));  // endpoint
  CHECK_FALSE(strictly_between({0, 0}, {3, 3}, {2, 2}));  // beyond
  CHECK_FALSE(strictly_between({0, 0}, {-1, -1}, {2, 2}));
  CHECK_FALSE(strictly_between({0, 0}, {1, 2}, {2, 2}));  // off the line
  CHECK_THROWS_AS(strictly_between({1, 1}, {0, 0}, {1, 1}), std::invalid_argument);
}

TEST_CASE("strictly_between agrees with orientation-based oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> d(-12, 12);
  for (int t = 0; t < 50000; ++t) {
    Point a{d(rng), d(rng)}, m{d(rng), d(rng)}, b{d(rng), d(rng)};
    if (a == b) continue;
    bool oracle = oracle_orientation(a, m, b) == 0 && m != a && m != b &&
                  std::min(a.x, b.x) <= m.x && m.x <= std::max(a.x, b.x) &&
                  std::min(a.y, b.y) <= m.y && m.y <= std::max(a.y, b.y);
    CHECK(strictly_between(a, m, b) == oracle);
  }
}

TEST_CASE("angular_order walks the 3x3 grid counterclockwise from (+1,0)") {
  Point pivot{1, 1};
  std::vector<Point> others{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2}};
  std::vector<Point> expected{{2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}};
  CHECK(angular_order(pivot, others) == expected);
}

TEST_CASE("angular_order breaks ray ties near to far") {
  Point pivot{0, 0};
  std::vector<Point> others{{3, 3}, {1, 0}, {2, 2}, {1, 1}};
  std::vector<Point> expected{{1, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK(angular_order(pivot, others) == expected);

  // Opposite rays fall in different half-planes.
  std::vector<Point> line{{-2, 0}, {2, 0}, {-1, 0}, {1, 0}};
  std::vector<Point> expect_line{{1, 0}, {2, 0}, {-1, 0}, {-2, 0}};
  CHECK(angular_order(pivot, line) == expect_line);
}

TEST_CASE("angular_order result is independent of input order") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Coord> d(-20, 20);
  for (int t = 0; t < 300; ++t) {
    Point pivot{d(rng), d(rng)};
    std::vector<Point> pts;
    for (int i = 0; i < 30; ++i) {
      Point p{d(rng), d(rng)};
      if (p == pivot) continue;
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto sorted = angular_order(pivot, pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(angular_order(pivot, pts) == sorted);
  }
}

TEST_CASE("angular_order rejects pivot among points") {
  std::vector<Point> pts{{1, 1}};
  CHECK_THROWS_AS(angular_order({1, 1}, pts), std::invalid_argument);
}

TEST_CASE("PointSet validates distinctness and bounds") {
  CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{0, kCoordLimit + 1}}), std::invalid_argument);
  PointSet ok({{0, 0}, {1, 1}});
  CHECK(ok.size() == 2);
}
