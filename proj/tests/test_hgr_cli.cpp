#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "tenjoin/cli.hpp"
#include "tenjoin/hgr.hpp"

using namespace tenjoin;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto dir = std::filesystem::temp_directory_path() / "tenjoin_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string triangle_hgr() {
  return "hgr 1\nvertices 3\nedge 1 1 2\nedge 1 1 3\nedge 1 2 3\n";
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hgr parsing") {
  HgrDocument doc = parse_hgr("hgr 1\nvertices 3\nedge 1 1 2 3\n");
  CHECK(doc.hypergraph.vertex_count() == 3);
  REQUIRE(doc.hypergraph.edges().size() == 1);
  CHECK(doc.hypergraph.edges()[0].vertices == VertexSet{1, 2, 3});

  HgrDocument frac = parse_hgr("hgr 1\nvertices 2\nedge 1/2 1 2\n");
  CHECK(frac.hypergraph.edges()[0].weight == make_rational(1, 2));

  HgrDocument dec = parse_hgr("hgr 1\nvertices 2\nedge 0.25 1 2\nwc 3 2/3\n");
  CHECK(dec.hypergraph.edges()[0].weight == make_rational(1, 4));
  CHECK(dec.has_weight_records);
  CHECK(dec.weights.at(3) == make_rational(2, 3));

  // comments and blank lines
  CHECK_NOTHROW(parse_hgr("# intro\nhgr 1\n\nvertices 2  # two\nedge 1 1 2\n"));
}

TEST_CASE("hgr parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 1\nvertices 3\nedge 1 1 1 2\n"),
                       doctest::Contains("line 3"), HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("vertices 3\n"), doctest::Contains("hgr 1"), HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 2\n"), doctest::Contains("version"), HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 1\nedge 1 1 2\n"), doctest::Contains("vertices"), HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 1\nvertices 2\nedge 1 1 5\n"), doctest::Contains("out of range"),
                       HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 1\nvertices 2\nedge -1 1 2\n"), doctest::Contains("negative"),
                       HgrParseError);
  CHECK_THROWS_WITH_AS(parse_hgr("hgr 1\nvertices 2\nbogus\n"), doctest::Contains("unknown record"),
                       HgrParseError);
}

TEST_CASE("serialize then parse is the identity on random documents") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    int count = static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      std::set<Vertex> verts;
      int c = 2 + static_cast<int>(rng() % std::min(3, n - 1));
      while (static_cast<int>(verts.size()) < c) verts.insert(1 + static_cast<int>(rng() % n));
      edges.push_back({VertexSet(verts.begin(), verts.end()),
                       make_rational(static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 4))});
    }
    Hypergraph h = build_hypergraph(n, edges);
    WeightTable w(1);
    w.set(2 + static_cast<int>(rng() % 3), make_rational(1 + static_cast<long>(rng() % 5), 2));
    HgrDocument doc = parse_hgr(serialize_hgr(h, w));
    CHECK(doc.hypergraph == h);
    for (const auto& [c, weight] : w.entries()) CHECK(doc.weights.at(c) == weight);
    // canonical form is stable
    CHECK(serialize_hgr(doc.hypergraph) == serialize_hgr(h));
  }
}

TEST_CASE("cli spectrum on the complete-graph fixture") {
  auto g = write_temp("triangle.hgr", triangle_hgr());
  auto joined = cli({"join", "--family", "bspan", "--b", "2", "--classes", "3,3", "--wc", "2=1",
                     g.string(), g.string()});
  REQUIRE(joined.code == 0);
  auto k6 = write_temp("k6.hgr", joined.out);

  auto direct = cli({"spectrum", "--matrix", "adj", "--method", "both", "--classes", "3,3", k6.string()});
  CHECK(direct.code == 0);
  CHECK(direct.out.find("agreement: yes") != std::string::npos);

  auto nlap = cli({"spectrum", "--matrix", "nlap", "--method", "both", "--classes", "3,3", k6.string()});
  CHECK(nlap.code == 0);

  auto json = cli({"spectrum", "--matrix", "lap", "--method", "both", "--classes", "3,3", "--json",
                   k6.string()});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"agreement\": true") != std::string::npos);
  CHECK(json.out.find("\"charpoly\"") != std::string::npos);
  CHECK(json.out.find("\"spectrum\"") != std::string::npos);
}

TEST_CASE("cli join output matches the fixture") {
  auto g = write_temp("triangle.hgr", triangle_hgr());
  auto joined = cli({"join", "--family", "bspan", "--b", "2", "--classes", "3,3", "--wc", "2=1",
                     g.string(), g.string()});
  REQUIRE(joined.code == 0);
  HgrDocument doc = parse_hgr(joined.out);
  CHECK(doc.hypergraph.vertex_count() == 6);
  CHECK(doc.hypergraph.edges().size() == 15);
  CHECK(doc.hypergraph.regular_valency() == Rational(5));
}

TEST_CASE("cli backbone join") {
  auto g = write_temp("triangle.hgr", triangle_hgr());
  auto pat = write_temp("path.hgr", "hgr 1\nvertices 3\nedge 1 1 2\nedge 1 2 3\n");
  auto joined = cli({"backbone-join", "--pattern", pat.string(), g.string(), g.string(), g.string()});
  REQUIRE(joined.code == 0);
  HgrDocument doc = parse_hgr(joined.out);
  CHECK(doc.hypergraph.vertex_count() == 9);
  CHECK(doc.hypergraph.edges().size() == 9 + 9 + 9);  // three triangles + two spanning pair families
}

TEST_CASE("cli verify") {
  auto a = write_temp("c4k1.hgr", "hgr 1\nvertices 5\nedge 1 1 2\nedge 1 2 3\nedge 1 3 4\nedge 1 1 4\n");
  auto b = write_temp("star.hgr", "hgr 1\nvertices 5\nedge 1 1 2\nedge 1 1 3\nedge 1 1 4\nedge 1 1 5\n");
  auto rep = cli({"verify", a.string(), b.string()});
  CHECK(rep.code == 1);  // laplacian differs
  CHECK(rep.out.find("adjacency cospectral:  yes") != std::string::npos);
  CHECK(rep.out.find("laplacian cospectral:  no") != std::string::npos);
  CHECK(rep.out.find("refused") != std::string::npos);

  auto self = cli({"verify", a.string(), a.string(), "--json"});
  CHECK(self.code == 1);  // normalized refused on an isolated vertex
  CHECK(self.out.find("\"adjacency\": true") != std::string::npos);

  auto both = cli({"verify", b.string(), b.string()});
  CHECK(both.code == 0);
}

TEST_CASE("cli decompose") {
  auto g = write_temp("triangle.hgr", triangle_hgr());
  auto joined = cli({"join", "--family", "bspan", "--b", "2", "--classes", "3,3", g.string(), g.string()});
  auto k6 = write_temp("k6b.hgr", joined.out);
  auto dec = cli({"decompose", "--classes", "3,3", k6.string()});
  CHECK(dec.code == 0);
  CHECK(dec.out.find("# constituent 1") != std::string::npos);
  CHECK(dec.out.find("member") != std::string::npos);
  CHECK(dec.out.find("wc 2 1") != std::string::npos);
}

TEST_CASE("cli build and usage errors") {
  auto profile = cli({"build", "--complete", "4", "--profile"});
  CHECK(profile.code == 0);
  CHECK(profile.out.find("edges: 11") != std::string::npos);

  auto bad = cli({"spectrum"});
  CHECK(bad.code == 2);
  auto unknown = cli({"frobnicate"});
  CHECK(unknown.code == 2);
  auto missing = cli({"spectrum", "/nonexistent/file.hgr"});
  CHECK(missing.code == 2);
  auto badmethod = cli({"spectrum", "--method", "bogus", "x.hgr"});
  CHECK(badmethod.code == 2);
}

TEST_CASE("cli cospectral on an exhausted scale") {
  auto rep = cli({"cospectral", "--n", "5", "--uniform", "3", "--regular"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("none found at n=5") != std::string::npos);
}

TEST_CASE("cli closed method refuses infeasible partitions") {
  // the path graph is not regular, so the one-class closed form cannot apply
  auto p = write_temp("p3.hgr", "hgr 1\nvertices 3\nedge 1 1 2\nedge 1 2 3\n");
  auto rep = cli({"spectrum", "--method", "closed", p.string()});
  CHECK(rep.code == 2);
  CHECK(rep.err.find("regular") != std::string::npos);
}
