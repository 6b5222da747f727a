#include "biplane/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "biplane/analysis.hpp"
#include "biplane/extremal.hpp"
#include "biplane/io.hpp"
#include "biplane/maximal.hpp"
#include "biplane/render.hpp"
#include "biplane/triangulation.hpp"

namespace biplane::cli {

namespace {

void print_edges(std::ostream& out, const char* label, std::span<const Edge> edges) {
  out << label << ' ' << edges.size() << '\n';
  for (const auto& e : edges) out << e.a << ' ' << e.b << '\n';
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw GeometryError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_check(const std::string& path, std::ostream& out) {
  const auto g = read_graph(path);
  const auto verdict = test_biplane(g);
  if (const auto* d = std::get_if<BiplaneDecomposition>(&verdict)) {
    out << "BIPLANE\n";
    print_edges(out, "layer1", d->layer1);
    print_edges(out, "layer2", d->layer2);
    return kOk;
  }
  if (const auto* w = std::get_if<OddCycleWitness>(&verdict)) {
    out << "NOT-BIPLANE\n";
    print_edges(out, "witness", w->cycle);
    return kNegative;
  }
  const auto& t = std::get<TooManyEdges>(verdict);
  out << "TOO-MANY-EDGES " << t.edges << " > " << t.limit << " (n = " << t.vertices << ")\n";
  return kNegative;
}

int cmd_triangulate(const std::string& path, bool enumerate, std::size_t cap, std::ostream& out) {
  auto file = read_file(path);
  if (enumerate) {
    const auto all = enumerate_triangulations(file.points, cap);
    out << "# " << all.size() << " triangulations\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      out << "# triangulation " << i << '\n';
      write_graph(out, GeometricGraph(file.points, all[i].edges()));
    }
    return kOk;
  }
  const auto t = file.graph ? Triangulation::complete(*file.graph) : Triangulation::complete(file.points, {});
  write_graph(out, GeometricGraph(file.points, t.edges()));
  return kOk;
}

int cmd_augment(const std::string& path, bool trace, std::ostream& out, std::ostream& err) {
  auto file = read_file(path);
  const GeometricGraph g = file.graph ? *file.graph : GeometricGraph(file.points, {});
  std::function<void(const FlipRecord&)> log;
  if (trace) {
    log = [&err](const FlipRecord& r) {
      err << "flip " << r.flipped.a << ' ' << r.flipped.b << " -> " << r.inserted.a << ' ' << r.inserted.b
          << " clause=" << to_string(r.clause) << " faces=" << r.merged_faces[0] << ',' << r.merged_faces[1]
          << " requeued=" << r.requeued.size() << '\n';
    };
  }
  const auto result = maximal_augment(g, log);
  write_graph(out, result.graph, &result.decomposition);
  return kOk;
}

struct GridFlip {
  bool corners = false;
  int position = 0;
  int side = 0;
};

// "corners" or "boundary:i" with an optional ":side" (0..3, quarter turns).
std::vector<GridFlip> parse_flips(const std::string& spec) {
  std::vector<GridFlip> out;
  std::stringstream ss(spec);
  std::string item;
  auto number = [&](const std::string& text) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw GeometryError("bad boundary entry in --flips: " + item);
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item == "corners") {
      out.push_back({true, 0, 0});
    } else if (item.rfind("boundary:", 0) == 0) {
      const std::string rest = item.substr(9);
      const auto colon = rest.find(':');
      GridFlip f;
      f.position = number(rest.substr(0, colon));
      if (colon != std::string::npos) f.side = number(rest.substr(colon + 1));
      if (f.side < 0 || f.side > 3) throw GeometryError("boundary side must be 0..3: " + item);
      out.push_back(f);
    } else if (!item.empty()) {
      throw GeometryError("unknown --flips entry: " + item);
    }
  }
  return out;
}

int cmd_generate(const std::string& family, std::size_t n, std::size_t h, std::size_t k, const std::string& flips,
                 std::ostream& out) {
  if (family == "convex") {
    write_points(out, gen_convex(n));
  } else if (family == "arc-triangle") {
    write_points(out, gen_arc_in_triangle(n));
  } else if (family == "hgon-arc") {
    write_points(out, gen_hgon_with_arc(n, h));
  } else {
    auto g = gen_grid(k);
    for (const auto& f : parse_flips(flips)) {
      g = f.corners ? apply_corner_flips(g) : apply_boundary_flips(g, f.position, f.side);
    }
    const auto d = g.decomposition();
    write_graph(out, g.graph, &d);
  }
  return kOk;
}

int cmd_bounds(std::size_t n, std::size_t h, std::ostream& out) {
  const auto b = bounds(n, h);
  out << "n " << b.n << "\nh " << b.h << '\n';
  out << "min_maximal " << b.min_maximal << '\n';
  out << "max_edges_hull " << b.max_edges_hull << '\n';
  if (b.max_edges_abs) out << "max_edges_abs " << *b.max_edges_abs << '\n';
  out << "max_edges " << b.max_edges() << '\n';
  out << "maximum_lower " << b.maximum_lower << '\n';
  return kOk;
}

int cmd_analyze(const std::string& path, bool conn, bool degrees, bool bnds, std::ostream& out) {
  const auto g = read_graph(path);
  if (!conn && !degrees && !bnds) conn = degrees = bnds = true;
  out << "n " << g.vertex_count() << "\nm " << g.edge_count() << '\n';
  if (conn) {
    const auto r = vertex_connectivity(g);
    out << "kappa " << r.kappa << "\nmin_degree " << r.min_degree << "\ncut";
    for (Vertex v : r.cut) out << ' ' << v;
    out << '\n';
  }
  if (degrees) {
    out << "degrees";
    for (const auto& [d, c] : degree_histogram(g)) out << ' ' << d << ':' << c;
    out << '\n';
  }
  if (bnds && g.vertex_count() >= 3 && g.points().strictness() == Strictness::Strict) {
    const auto b = bounds(g.vertex_count(), convex_hull(g.points()).size());
    out << "h " << b.h << "\nmin_maximal " << b.min_maximal << "\nmax_edges " << b.max_edges() << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string& path, std::size_t cap, std::ostream& out) {
  const auto file = read_file(path);
  const auto r = brute_force_maximum(file.points, cap);
  out << "maximum " << r.maximum_edges << "\ntriangulations " << r.triangulation_count << '\n';
  write_graph(out, r.witness);
  return kOk;
}

int cmd_gap(const std::string& path, std::size_t trials, std::uint64_t seed, std::ostream& out) {
  const auto file = read_file(path);
  const auto r = find_maximal_gap(file.points, trials, seed);
  out << "trials " << r.trials << "\nmin " << r.min_edges << "\nmax " << r.max_edges << '\n';
  return kOk;
}

int cmd_render(const std::string& path, const std::string& target, std::ostream& out) {
  auto file = read_file(path);
  if (!file.graph) file.graph = GeometricGraph(file.points, {});
  BiplaneDecomposition d;
  if (file.layers) {
    d = *file.layers;
  } else {
    const auto verdict = test_biplane(*file.graph);
    if (!is_biplane(verdict)) {
      out << "NOT-BIPLANE\n";
      return kNegative;
    }
    d = std::get<BiplaneDecomposition>(verdict);
  }
  Sink sink(target, out);
  *sink << render_svg(*file.graph, with_shared_edges(*file.graph, d));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biplane geometric graphs: recognition, augmentation, extremal constructions"};
  app.name("biplanekit");
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");  // frees -h for --h

  std::string file, target, family, flips;
  bool enumerate = false, trace = false, conn = false, degrees = false, bnds = false;
  std::size_t cap = 9, n = 0, h = 0, k = 0, trials = 0;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "Decide biplanarity of a graph file");
  check->add_option("graph", file, "Graph file")->required();

  auto* tri = app.add_subcommand("triangulate", "Complete a plane graph or point set to a triangulation");
  tri->add_option("points", file, "Point or graph file")->required();
  tri->add_flag("--enumerate", enumerate, "List every triangulation (small inputs)");
  tri->add_option("--cap", cap, "Largest point count for --enumerate")->capture_default_str();

  auto* aug = app.add_subcommand("augment", "Augment a biplane graph to a maximal one");
  aug->add_option("graph", file, "Graph or point file")->required();
  aug->add_flag("--trace", trace, "Log each flip to stderr");

  auto* gen = app.add_subcommand("generate", "Write a generated point set or graph");
  gen->add_option("family", family, "convex | arc-triangle | hgon-arc | grid")
      ->required()
      ->check(CLI::IsMember({"convex", "arc-triangle", "hgon-arc", "grid"}));
  gen->add_option("--n", n, "Number of points");
  gen->add_option("--h", h, "Hull size (hgon-arc)");
  gen->add_option("--k", k, "Grid side (grid)");
  gen->add_option("--flips", flips, "Grid exchanges: corners,boundary:i[:side],...");
  gen->add_option("--out", target, "Output file (default stdout)");

  auto* bnd = app.add_subcommand("bounds", "Print the edge-count bounds for n points with h on the hull");
  bnd->add_option("--n", n)->required();
  bnd->add_option("--h", h)->required();

  auto* ana = app.add_subcommand("analyze", "Connectivity, degrees and bounds of a graph");
  ana->add_option("graph", file, "Graph file")->required();
  ana->add_flag("--connectivity", conn);
  ana->add_flag("--degrees", degrees);
  ana->add_flag("--bounds", bnds);

  auto* ora = app.add_subcommand("oracle", "Brute-force maximum biplane graph");
  ora->add_option("points", file, "Point file")->required();
  ora->add_option("--cap", cap, "Largest admissible point count")->capture_default_str();

  auto* gap = app.add_subcommand("gap", "Search for maximal graphs of different sizes");
  gap->add_option("points", file, "Point file")->required();
  gap->add_option("--trials", trials)->required();
  gap->add_option("--seed", seed)->required();

  auto* ren = app.add_subcommand("render", "Draw a layered graph as SVG");
  ren->add_option("graph", file, "Graph file")->required();
  ren->add_option("--out", target, "SVG file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*tri) return cmd_triangulate(file, enumerate, cap, out);
    if (*aug) return cmd_augment(file, trace, out, err);
    if (*gen) {
      if (family == "grid" ? k == 0 : n == 0) throw GeometryError(family == "grid" ? "--k is required" : "--n is required");
      if (family == "hgon-arc" && h == 0) throw GeometryError("--h is required");
      if (family != "grid" && !flips.empty()) throw GeometryError("--flips applies to grid only");
      Sink sink(target, out);
      return cmd_generate(family, n, h, k, flips, *sink);
    }
    if (*bnd) return cmd_bounds(n, h, out);
    if (*ana) return cmd_analyze(file, conn, degrees, bnds, out);
    if (*ora) return cmd_oracle(file, cap, out);
    if (*gap) return cmd_gap(file, trials, seed, out);
    if (*ren) return cmd_render(file, target, out);
  } catch (const NotBiplaneError& e) {
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace biplane::cli
