#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hypermaps/dc.hpp"
#include "hypermaps/io.hpp"
#include "hypermaps/meander.hpp"

using namespace hypermaps;

namespace {

std::string data_dir() {
  const char* env = std::getenv("HYPERMAPS_DATA_DIR");
  return env ? env : "data";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::string> kShippedFiles = {"planar12.hm",   "torus9.hm", "pair5.hm",
                                                "map12.hm",      "map20.hm",  "hyperedge6.hm"};

}  // namespace

TEST_CASE("hypermap file parsing") {
  HypermapFile f = parse_hypermap_file("n = 5\nsigma = (1,4)(2,5)\nalpha = (1,2,3)(4,5)\n");
  Hypermap h = f.to_hypermap();
  CHECK(h.size() == 5);
  CHECK(h.genus() == 0);

  // comments and blank lines are fine
  CHECK_NOTHROW(parse_hypermap_file("# comment\nn = 2\n\nsigma = ()\nalpha = (1,2)\n"));

  CHECK_THROWS_AS(parse_hypermap_file("n = 2\nsigma = ()\n"), parse_error);
  CHECK_THROWS_AS(parse_hypermap_file("n = x\nsigma = ()\nalpha = ()\n"), parse_error);
  CHECK_THROWS_AS(parse_hypermap_file("n = 2\nsigma = ()\nalpha = (1,2)\nbogus = 1\n"),
                  parse_error);
  CHECK_THROWS_AS(parse_hypermap_file("n = 2\nnot a line\nsigma = ()\nalpha = (1,2)\n"),
                  parse_error);
  // parses but fails validation
  CHECK_THROWS_AS(parse_hypermap_file("n = 2\nsigma = ()\nalpha = ()\n").to_hypermap(),
                  validation_error);
}

TEST_CASE("round trip over every shipped example file") {
  for (const auto& name : kShippedFiles) {
    HypermapFile f = parse_hypermap_file(slurp(data_dir() + "/" + name));
    Hypermap h = f.to_hypermap();
    HypermapFile f2 = parse_hypermap_file(serialize_hypermap(h, f.name));
    CHECK(f2.to_hypermap() == h);
    CHECK(f2.name == f.name);
  }
}

TEST_CASE("count methods agree on the shipped corpus") {
  for (const auto& name : kShippedFiles) {
    Hypermap h = parse_hypermap_file(slurp(data_dir() + "/" + name)).to_hypermap();
    for (int g = 0; g <= h.genus(); ++g)
      CHECK(count_spanning_unicellular(h, g) == count_via_recursion(h, g));
  }
}

TEST_CASE("diagram emission is deterministic") {
  Hypermap h = parse_hypermap_file(slurp(data_dir() + "/pair5.hm")).to_hypermap();
  auto spans = spanning_unicellular(h, 0);
  REQUIRE(!spans.empty());
  OneLineDiagram d = one_line_diagram(h, spans.front().theta);
  CHECK(one_line_json(d) == one_line_json(d));
  CHECK(one_line_svg(d) == one_line_svg(d));
  CHECK(one_line_svg(d).substr(0, 4) == "<svg");

  Permutation gamma = spans.front().theta.inverse();
  Permutation eta = vertex_tour(h, gamma).cycle;
  TwoDiskDiagram td = two_disk_diagram(h, eta, spans.front().face_tour);
  CHECK(two_disk_json(td) == two_disk_json(td));

  Hypermap map20 = parse_hypermap_file(slurp(data_dir() + "/map20.hm")).to_hypermap();
  auto rspans = spanning_unicellular(map20.reciprocal(), 0);
  LabeledPlaneTree t = span_to_tree(map20, rspans.front().theta);
  CHECK(tree_to_dot(t) == tree_to_dot(t));
  CHECK(tree_to_text(t) == tree_to_text(t));
  CHECK(tree_to_text(t).find("@") != std::string::npos);
}

TEST_CASE("tree text and dot shapes") {
  Hypermap h(Permutation::identity(2), parse_cycles("(1,2)", 2));
  LabeledPlaneTree t = span_to_tree(h, Permutation::identity(2));
  CHECK(tree_to_text(t) == "@1(1@2())\n");
  std::string dot = tree_to_dot(t);
  CHECK(dot.find("graph tree {") == 0);
  CHECK(dot.find("v0 -- v1 [label=\"1\"]") != std::string::npos);
}

TEST_CASE("cli surface") {
  const char* cli = std::getenv("HYPERMAPS_CLI");
  if (!cli) {
    SUCCEED("HYPERMAPS_CLI not set; CLI exercised by the ctest entries instead");
    return;
  }
  auto run = [&](const std::string& args) {
    std::string cmd = std::string(cli) + " " + args + " > /tmp/hm_cli_out.txt 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return std::make_pair(WEXITSTATUS(rc), slurp("/tmp/hm_cli_out.txt"));
  };
  auto dir = data_dir();
  CHECK(run("genus " + dir + "/planar12.hm") == std::make_pair(0, std::string("0\n")));
  CHECK(run("count --genus 0 " + dir + "/torus9.hm") == std::make_pair(0, std::string("21\n")));
  CHECK(run("count --genus 0 --method recursion " + dir + "/torus9.hm") ==
        std::make_pair(0, std::string("21\n")));
  CHECK(run("meanders --order 2") == std::make_pair(0, std::string("2\t2\n")));
  CHECK(run("meanders --order 3 --semi --oracle") == std::make_pair(0, std::string("3\t2\n")));

  // exit codes: 1 parse, 2 validation, 3 precondition
  std::ofstream("/tmp/hm_bad_parse.hm") << "n = x\nsigma = ()\nalpha = ()\n";
  CHECK(run("genus /tmp/hm_bad_parse.hm").first == 1);
  std::ofstream("/tmp/hm_bad_valid.hm") << "n = 2\nsigma = ()\nalpha = ()\n";
  CHECK(run("genus /tmp/hm_bad_valid.hm").first == 2);
  CHECK(run("tutte " + dir + "/pair5.hm").first == 3);

  // enumerate lists exactly the three spanning hypertrees
  auto [rc, text] = run("enumerate --genus 0 " + dir + "/pair5.hm");
  CHECK(rc == 0);
  CHECK(text == "(1,2,3)\n(1,3)(4,5)\n(2,3)(4,5)\n");

  // transforms serialize back to parseable files
  auto [rc2, text2] = run("transform --op reciprocal " + dir + "/planar12.hm");
  CHECK(rc2 == 0);
  Hypermap rt = parse_hypermap_file(text2).to_hypermap();
  Hypermap orig = parse_hypermap_file(slurp(dir + "/planar12.hm")).to_hypermap();
  CHECK(rt == orig.reciprocal());

  // dc surface
  auto [rc3, text3] = run("dc enumerate " + dir + "/pair5.hm");
  CHECK(rc3 == 0);
  CHECK(!text3.empty());
  std::string first_edges = text3.substr(0, text3.find('\n'));
  auto [rc4, text4] = run("dc validate --edges \"" + first_edges + "\" " + dir + "/pair5.hm");
  CHECK(rc4 == 0);
  CHECK(text4 == "true\n");
  auto [rc5, text5] = run("dc run --edges \"" + first_edges + "\" " + dir + "/pair5.hm");
  CHECK(rc5 == 0);
  CHECK(text5.find("final sigma") != std::string::npos);

  // tutte output format
  std::ofstream("/tmp/hm_tri.hm") << "n = 6\nsigma = (1,6)(2,3)(4,5)\nalpha = (1,2)(3,4)(5,6)\n";
  CHECK(run("tutte /tmp/hm_tri.hm") ==
        std::make_pair(0, std::string("x^0 y^1: 1\nx^1 y^0: 1\nx^2 y^0: 1\n")));

  // diagrams
  CHECK(run("diagram --kind one-line --format svg " + dir + "/pair5.hm").second.substr(0, 4) ==
        "<svg");
  CHECK(run("diagram --kind two-disk --format json " + dir + "/torus9.hm").first == 0);
  CHECK(run("diagram --kind tree --format dot " + dir + "/map20.hm").second.substr(0, 10) ==
        "graph tree");
  CHECK(run("rtree reduce --theta \"(2,4,3)(6,10,12,8)(7,17)(13,14)(18,19,20)\" " + dir +
            "/map20.hm")
            .first == 0);
}
