#include "doctest.h"

#include "cli.hpp"
#include "delzant/catalog.hpp"
#include "delzant/polyhedron.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace delzant;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "delzant");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DELZANT_DATA_DIR) + "/" + name; }

// Everything after the report lines that precede "dim".
std::string lpoly_body(const std::string& text) { return text.substr(text.find("dim ")); }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("delzant_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("documented examples") {
  auto r = invoke({"polytope", "count", "--in", data("pyramid.lpoly"), "-m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  r = invoke({"weyl", "induce", "--type", "A1", "--mu", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  r = invoke({"weyl", "induce", "--type", "A1", "--mu", "-3"});
  CHECK(r.out == "-chi 1\n");
  r = invoke({"verify", "vergne"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-chi 0") != std::string::npos);
}

TEST_CASE("desingularized output re-parses") {
  for (const auto& verb : {"desing", "shift"}) {
    const auto r = invoke({"polytope", verb, "--in", data("pyramid.lpoly")});
    REQUIRE(r.code == 0);
    const auto body = lpoly_body(r.out);
    const auto p = parse_lpoly(body);
    CHECK(format_lpoly(p) == body);
    CHECK(has_constant_excess(p, face_lattice(p)));
  }
  const auto r = invoke({"polytope", "desing", "--in", data("pyramid.lpoly")});
  CHECK(r.out.rfind("step: label 0 0 -4 ; -3", 0) == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"polytope", "faces", "--in", data("pyramid.lpoly")},
      {"polytope", "shift", "--in", data("pyramid.lpoly")},
      {"polytope", "ehrhart", "--in", data("weighted_triangle.lpoly")},
      {"verify", "euler", "--type", "A2", "--lambda", "1/3,1/7", "--seed", "4"},
      {"verify", "genus", "--seed", "9"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c), b = invoke(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verification verbs") {
  CHECK(invoke({"verify", "glue", "--delta", data("segment.lpoly"), "--subdivision", data("split_at_1.sub")}).code == 0);
  CHECK(invoke({"verify", "dual-subdivision", "--type", "B2", "--lambda", "1/5,2/7"}).code == 0);
  CHECK(invoke({"verify", "clebsch-gordan"}).code == 0);
  const auto cg = invoke({"verify", "clebsch-gordan", "--lambda", "2", "--nu", "1"});
  CHECK(cg.code == 0);
  CHECK(cg.out.rfind("1\tchi 1\n1\tchi 3\n", 0) == 0);
  CHECK(invoke({"verify", "quantum-dh", "--in", data("half_segment.lpoly"), "--point", "1/2"}).code == 0);
  CHECK(invoke({"verify", "genus", "--in", data("pyramid.lpoly"), "--xi", "1,3,7"}).code == 0);
  CHECK(invoke({"polytope", "reciprocity", "--in", data("weighted_triangle.lpoly")}).code == 0);
  CHECK(invoke({"polytope", "brion", "--in", data("weighted_triangle.lpoly"), "--z", "2,3"}).code == 0);
  CHECK(invoke({"weyl", "reflect", "--type", "A2", "--lambda", "2,1"}).code == 0);

  // A split through Delta's vertex is not admissible: input error.
  const auto bad = temp_file("split2.sub", "dim 1\nlabel -1 ; -3\n---\ndim 1\nlabel 1 ; 3\nlabel -1 ; -3\n---\ndim 1\nlabel 1 ; 3\n");
  CHECK(invoke({"verify", "glue", "--delta", data("segment.lpoly"), "--subdivision", bad}).code == 2);

  // A gap in the cover makes the Euler identity fail: verification failure.
  const auto gap = temp_file("gap.sub", "dim 1\nlabel -1 ; 0\n---\ndim 1\nlabel 1 ; 1\n");
  CHECK(invoke({"verify", "euler", "--subdivision", gap}).code == 1);
}

TEST_CASE("usage and input errors") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"polytope", "count"}).code == 2);
  CHECK(invoke({"weyl", "group", "--type", "E8"}).code == 2);
  CHECK(invoke({"polytope", "count", "--in", "/nonexistent.lpoly"}).code == 2);
  const auto path = temp_file("bad.lpoly", "dim 2\nlabel 1 0 ; 0\nlabel 1 ; 0\n");
  const auto r = invoke({"polytope", "count", "--in", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(path + ":3:") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}
