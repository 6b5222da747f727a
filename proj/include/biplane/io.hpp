#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "biplane/biplane_test.hpp"

namespace biplane {

/// Text format, '#' starts a comment that runs to the end of the line:
///
///   n
///   x y        (n lines, integers)
///   m          (optional graph section)
///   i j        (m lines, 0-based indices)
///   r          (optional layer section: r layer-1 edges, then b layer-2 edges)
///   i j
///   b
///   i j
///
/// Point sets are Strict when they validate as such and Relaxed otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line;
  std::size_t column;
};

struct GraphFile {
  PointSet points;
  std::optional<GeometricGraph> graph;
  std::optional<BiplaneDecomposition> layers;
};

GraphFile parse(std::istream& in, const std::string& source = "<input>");
GraphFile read_file(const std::string& path);

/// A file with points only reads as the empty graph.
GeometricGraph read_graph(const std::string& path);

void write_points(std::ostream& out, const PointSet& points);
void write_graph(std::ostream& out, const GeometricGraph& g, const BiplaneDecomposition* layers = nullptr);

}  // namespace biplane
