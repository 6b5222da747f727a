#include "biplane/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace biplane {

ParseError::ParseError(std::string source, std::size_t line_no, std::size_t col, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line_no) + ":" + std::to_string(col) + ": " + message),
      line(line_no),
      column(col) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Reader {
 public:
  Reader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(in, text)) {
      ++line_no;
      std::size_t i = 0;
      while (i < text.size() && text[i] != '#') {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        const std::size_t start = i;
        while (i < text.size() && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        tokens_.push_back({text.substr(start, i - start), line_no, start + 1});
      }
    }
    end_line_ = line_no + 1;
  }

  bool done() const { return pos_ == tokens_.size(); }

  long long integer(const char* what) {
    if (done()) throw ParseError(source_, end_line_, 1, std::string("unexpected end of input, expected ") + what);
    const Token& t = tokens_[pos_++];
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
      throw ParseError(source_, t.line, t.column, std::string("expected ") + what + ", found '" + t.text + "'");
    }
    return value;
  }

  std::size_t count(const char* what) {
    const Token& t = peek_or_end();
    const long long v = integer(what);
    if (v < 0) throw ParseError(source_, t.line, t.column, std::string(what) + " must be non-negative");
    return static_cast<std::size_t>(v);
  }

  Edge edge(std::size_t n) {
    const Token& t = peek_or_end();
    const long long a = integer("vertex index");
    const long long b = integer("vertex index");
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw ParseError(source_, t.line, t.column, "vertex index out of range");
    }
    if (a == b) throw ParseError(source_, t.line, t.column, "self-loop");
    return make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }

  const Token& peek_or_end() const {
    static const Token end{"", 0, 0};
    return done() ? end : tokens_[pos_];
  }
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(source_, at.line ? at.line : end_line_, at.column ? at.column : 1, message);
  }

 private:
  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t end_line_ = 1;
};

std::vector<Edge> read_edges(Reader& r, std::size_t n, const char* what) {
  const std::size_t m = r.count(what);
  std::vector<Edge> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) out.push_back(r.edge(n));
  return out;
}

}  // namespace

GraphFile parse(std::istream& in, const std::string& source) {
  Reader r(in, source);
  const Token first = r.peek_or_end();
  const std::size_t n = r.count("point count");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Token at = r.peek_or_end();
    const long long x = r.integer("x coordinate");
    const long long y = r.integer("y coordinate");
    if (x > kCoordLimit || x < -kCoordLimit || y > kCoordLimit || y < -kCoordLimit) {
      r.fail(at, "coordinate exceeds 2^30 in absolute value");
    }
    pts.push_back({x, y});
  }
  const auto strictness = validate(pts, Strictness::Strict).ok ? Strictness::Strict : Strictness::Relaxed;
  GraphFile file;
  try {
    file.points = PointSet(std::move(pts), strictness);
  } catch (const GeometryError& e) {
    r.fail(first, e.what());
  }
  if (r.done()) return file;

  const Token graph_at = r.peek_or_end();
  auto edges = read_edges(r, n, "edge count");
  try {
    file.graph = GeometricGraph(file.points, std::move(edges));
  } catch (const GeometryError& e) {
    r.fail(graph_at, e.what());
  }
  if (r.done()) return file;

  const Token layers_at = r.peek_or_end();
  BiplaneDecomposition d;
  d.layer1 = read_edges(r, n, "layer-1 edge count");
  d.layer2 = read_edges(r, n, "layer-2 edge count");
  if (!r.done()) r.fail(r.peek_or_end(), "trailing input after layer section");
  if (!verify_decomposition(*file.graph, d)) {
    r.fail(layers_at, "layers are not crossing-free or do not cover the graph");
  }
  file.layers = std::move(d);
  return file;
}

GraphFile read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  return parse(in, path);
}

GeometricGraph read_graph(const std::string& path) {
  auto f = read_file(path);
  if (!f.graph) return GeometricGraph(std::move(f.points), {});
  return std::move(*f.graph);
}

void write_points(std::ostream& out, const PointSet& points) {
  out << points.size() << '\n';
  for (const auto& p : points.points()) out << p.x << ' ' << p.y << '\n';
}

void write_graph(std::ostream& out, const GeometricGraph& g, const BiplaneDecomposition* layers) {
  write_points(out, g.points());
  auto list = [&](std::span<const Edge> edges) {
    out << edges.size() << '\n';
    for (const auto& e : edges) out << e.a << ' ' << e.b << '\n';
  };
  list(g.edges());
  if (layers) {
    out << "# layer 1\n";
    list(layers->layer1);
    out << "# layer 2\n";
    list(layers->layer2);
  }
}

}  // namespace biplane
