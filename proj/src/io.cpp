#include "pvg/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace pvg {

namespace {

// Strips comments and reports content lines with their 1-based numbers.
template <typename Fn>
void for_each_content_line(std::istream& in, Fn&& fn) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) fn(number, line);
  }
}

bool parse_ints(const std::string& line, long long* out, int count) {
  std::istringstream ss(line);
  for (int i = 0; i < count; ++i)
    if (!(ss >> out[i])) return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

PointSet read_points(std::istream& in, const std::string& source) {
  std::vector<Point> points;
  int bad_line = 0;
  std::string bad_what;
  for_each_content_line(in, [&](int number, const std::string& line) {
    if (bad_line) return;
    long long v[2];
    if (!parse_ints(line, v, 2)) {
      bad_line = number;
      bad_what = "expected two integers 'x y'";
      return;
    }
    points.push_back({v[0], v[1]});
  });
  if (bad_line) throw ParseError(source, bad_line, bad_what);
  try {
    return PointSet(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_points(in, path);
}

void write_points(std::ostream& out, const PointSet& points) {
  for (const Point& p : points) out << p.x << " " << p.y << "\n";
}

Graph read_graph(std::istream& in, const std::string& source) {
  bool have_header = false;
  long long n = 0, m = 0;
  PairSet edges;
  int bad_line = 0;
  std::string bad_what;
  for_each_content_line(in, [&](int number, const std::string& line) {
    if (bad_line) return;
    long long v[2];
    if (!parse_ints(line, v, 2)) {
      bad_line = number;
      bad_what = "expected two integers";
      return;
    }
    if (!have_header) {
      n = v[0];
      m = v[1];
      if (n < 0 || m < 0) {
        bad_line = number;
        bad_what = "header 'n m' must be non-negative";
      }
      have_header = true;
      return;
    }
    if (static_cast<long long>(edges.size()) >= m) {
      bad_line = number;
      bad_what = "more edge lines than the header announced";
      return;
    }
    if (v[0] < 0 || v[1] >= n || v[0] >= v[1]) {
      bad_line = number;
      bad_what = "edge must satisfy 0 <= u < v < n";
      return;
    }
    edges.push_back({static_cast<int>(v[0]), static_cast<int>(v[1])});
  });
  if (bad_line) throw ParseError(source, bad_line, bad_what);
  if (!have_header) throw ParseError(source, 0, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(source, 0, "edge count does not match header");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, 0, e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << " " << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace pvg
