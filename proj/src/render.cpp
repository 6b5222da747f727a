#include "biplane/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace biplane {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

BiplaneDecomposition with_shared_edges(const GeometricGraph& g, const BiplaneDecomposition& d) {
  const auto crossings = crossing_graph(g);
  std::set<Edge> l1(d.layer1.begin(), d.layer1.end()), l2(d.layer2.begin(), d.layer2.end());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (crossings[i].empty()) {
      l1.insert(g.edges()[i]);
      l2.insert(g.edges()[i]);
    }
  }
  return {{l1.begin(), l1.end()}, {l2.begin(), l2.end()}};
}

std::string render_svg(const GeometricGraph& g, const BiplaneDecomposition& d, const RenderSpec& spec) {
  if (!verify_decomposition(g, d)) throw GeometryError("decomposition does not match the graph");
  const auto pts = g.points().points();

  Coord min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (!pts.empty()) {
    min_x = max_x = pts[0].x;
    min_y = max_y = pts[0].y;
    for (const auto& p : pts) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = static_cast<double>(std::max<Coord>({max_x - min_x, max_y - min_y, 1}));
  const double scale = spec.scale > 0 ? spec.scale : spec.extent / span;
  const double width = static_cast<double>(max_x - min_x) * scale + 2 * spec.margin;
  const double height = static_cast<double>(max_y - min_y) * scale + 2 * spec.margin;
  auto sx = [&](Coord x) { return fmt(spec.margin + static_cast<double>(x - min_x) * scale); };
  auto sy = [&](Coord y) { return fmt(spec.margin + static_cast<double>(max_y - y) * scale); };

  const std::set<Edge> l1(d.layer1.begin(), d.layer1.end()), l2(d.layer2.begin(), d.layer2.end());
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<style>\n";
  out += "  line { stroke-width: 1.5; fill: none; }\n";
  out += "  line.layer1 { stroke: " + spec.red + "; stroke-dasharray: 6 4; }\n";
  out += "  line.layer2 { stroke: " + spec.blue + "; stroke-dasharray: 1.5 3; }\n";
  out += "  line.shared { stroke: " + spec.purple + "; }\n";
  out += "  circle { fill: black; }\n";
  out += "</style>\n";

  for (const auto& e : sorted(g.edges())) {
    const bool in1 = l1.contains(e), in2 = l2.contains(e);
    const char* cls = in1 && in2 ? "shared" : in1 ? "layer1" : "layer2";
    const Point& p = pts[e.a];
    const Point& q = pts[e.b];
    out += "<line class=\"" + std::string(cls) + "\" x1=\"" + sx(p.x) + "\" y1=\"" + sy(p.y) + "\" x2=\"" + sx(q.x) +
           "\" y2=\"" + sy(q.y) + "\"/>\n";
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    out += "<circle id=\"v" + std::to_string(v) + "\" cx=\"" + sx(pts[v].x) + "\" cy=\"" + sy(pts[v].y) + "\" r=\"" +
           fmt(spec.vertex_radius) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace biplane
