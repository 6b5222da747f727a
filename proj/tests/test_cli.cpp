#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biplane/cli.hpp"
#include "biplane/io.hpp"
#include "doctest.h"

using namespace biplane;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("biplanekit_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char* kK4 = "4\n0 0\n4 0\n4 4\n0 4\n6\n0 1\n1 2\n2 3\n0 3\n0 2\n1 3\n";
const char* kK5 = "5\n0 10\n10 3\n6 -8\n-6 -8\n-10 3\n10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

}  // namespace

TEST_CASE("cli check") {
  auto r = run({"check", temp_file("k4", kK4)});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("BIPLANE\n", 0) == 0);

  r = run({"check", temp_file("k5", kK5)});
  CHECK(r.code == cli::kNegative);
  CHECK(r.out.rfind("NOT-BIPLANE\nwitness 5\n", 0) == 0);

  r = run({"check", temp_file("bad", "3\n0 0\n1 x\n2 2\n")});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find(":3:3:") != std::string::npos);

  CHECK(run({"check", "--bogus", temp_file("k4", kK4)}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
}

TEST_CASE("cli augment on eight convex points emits 18 edges") {
  const auto path = temp_file("c8", "8\n0 0\n1 1\n2 4\n3 9\n4 16\n5 25\n6 36\n7 49\n");
  const auto r = run({"augment", path});
  REQUIRE(r.code == cli::kOk);
  std::istringstream in(r.out);
  const auto f = parse(in);
  REQUIRE(f.graph);
  CHECK(f.graph->edge_count() == 18);
  REQUIRE(f.layers);

  const auto traced = run({"augment", "--trace", path});
  CHECK(traced.out == r.out);
  CHECK(traced.err.find("clause=") != std::string::npos);
}

TEST_CASE("cli generate, bounds, analyze, oracle, gap, render") {
  auto r = run({"generate", "grid", "--k", "8", "--flips", "corners,boundary:4"});
  REQUIRE(r.code == cli::kOk);
  const auto grid = temp_file("grid", r.out);
  r = run({"check", grid});
  CHECK(r.code == cli::kOk);
  r = run({"analyze", grid, "--degrees"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("degrees 4:4") != std::string::npos);
  CHECK(r.out.find("kappa") == std::string::npos);

  CHECK(run({"generate", "grid", "--k", "8", "--flips", "sideways"}).code == cli::kInputError);
  CHECK(run({"generate", "grid", "--k", "9", "--flips", "boundary:5:3,boundary:5:1"}).code == cli::kOk);
  CHECK(run({"generate", "grid", "--k", "9", "--flips", "boundary:5:4"}).code == cli::kInputError);
  CHECK(run({"generate", "hgon-arc", "--n", "8"}).code == cli::kInputError);

  r = run({"bounds", "--n", "10", "--h", "4"});
  CHECK(r.out.find("min_maximal 26\n") != std::string::npos);

  r = run({"generate", "arc-triangle", "--n", "6"});
  const auto arc = temp_file("arc", r.out);
  r = run({"oracle", arc});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("maximum 14\n", 0) == 0);
  CHECK(run({"oracle", arc, "--cap", "5"}).code == cli::kInputError);

  r = run({"gap", arc, "--trials", "5", "--seed", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == run({"gap", arc, "--trials", "5", "--seed", "3"}).out);
  CHECK(run({"gap", arc, "--trials", "5"}).code == cli::kInputError);

  const auto svg = std::filesystem::temp_directory_path() / "biplanekit_test.svg";
  r = run({"render", temp_file("k4", kK4), "--out", svg.string()});
  CHECK(r.code == cli::kOk);
  std::ifstream in(svg);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("<svg") != std::string::npos);
  CHECK(run({"render", temp_file("k5", kK5)}).code == cli::kNegative);
  // a points-only file is the empty graph
  r = run({"render", temp_file("pts", "3\n0 0\n4 0\n0 3\n")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("<circle") != std::string::npos);
  CHECK(run({"check", temp_file("pts", "3\n0 0\n4 0\n0 3\n")}).out == "BIPLANE\nlayer1 0\nlayer2 0\n");
}

TEST_CASE("cli triangulate") {
  auto r = run({"triangulate", "--enumerate", temp_file("c6", "6\n0 0\n1 1\n2 4\n3 9\n4 16\n5 25\n")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("# 14 triangulations\n", 0) == 0);
  r = run({"triangulate", temp_file("k4", kK4)});
  CHECK(r.code == cli::kInputError);  // crossing constraints
}
