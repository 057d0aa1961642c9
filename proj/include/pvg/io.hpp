// Text formats: point files ("x y" per line) and graph files ("n m" header
// then "u v" edge lines).  '#' starts a comment; blank lines are ignored.
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pvg/geometry.hpp"
#include "pvg/graph.hpp"

namespace pvg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

PointSet read_points(std::istream& in, const std::string& source = "<points>");
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& points);

Graph read_graph(std::istream& in, const std::string& source = "<graph>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace pvg
