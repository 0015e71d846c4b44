#include <catch2/catch_amalgamated.hpp>

#include <queue>
#include <random>
#include <set>

#include "hypermaps/rtree.hpp"
#include "test_support.hpp"

using namespace hypermaps;

namespace {

/// Reconstruction of the worked example from the quoted cycles: five
/// vertices, ten edges, loops 9 and 10 at vertex 3.
Hypermap example_map() {
  return Hypermap(
      parse_cycles("(1,4,3,2)(5,9,11,16)(6,10,12,13,14,15,8)(7,17)(18,19,20)", 20),
      parse_cycles("(1,18)(2,17)(3,6)(4,16)(5,20)(7,19)(8,9)(10,11)(12,14)(13,15)", 20));
}

Permutation example_theta() {
  return parse_cycles("(2,4,3)(6,10,12,8)(7,17)(13,14)(18,19,20)", 20);
}

std::vector<std::pair<int, std::string>> labeled_cycle(const Hypermap& h,
                                                       const VertexEdgeLabeling& lab,
                                                       Point start) {
  std::vector<std::pair<int, std::string>> out;
  for (Point p : h.sigma().cycle_of(start))
    out.emplace_back(lab.vertex_number[static_cast<std::size_t>(p)],
                     lab.edge_label[static_cast<std::size_t>(p)].to_string());
  return out;
}

bool cyclically_equal(std::vector<std::pair<int, std::string>> a,
                      const std::vector<std::pair<int, std::string>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return a == b;
}

}  // namespace

TEST_CASE("vertex-edge labeling of the worked example") {
  Hypermap h = example_map();
  REQUIRE(h.is_map());
  VertexEdgeLabeling lab = label_map(h);
  CHECK(lab.vertex_count == 5);
  CHECK(lab.edge_count == 10);

  CHECK(cyclically_equal(labeled_cycle(h, lab, 5),
                         {{3, "7"}, {3, "3"}, {3, "8"}, {3, "9"}, {3, "10"}, {3, "9'"}, {3, "10'"}}));

  // alpha cycles 5 and 9 as quoted
  auto alpha_cycles = h.alpha().cycles();
  auto coords = [&](Point p) {
    return std::make_pair(lab.vertex_number[static_cast<std::size_t>(p)],
                          lab.edge_label[static_cast<std::size_t>(p)].to_string());
  };
  CHECK(coords(alpha_cycles[4][0]) == std::make_pair(2, std::string("5")));
  CHECK(coords(alpha_cycles[4][1]) == std::make_pair(5, std::string("5")));
  CHECK(coords(alpha_cycles[8][0]) == std::make_pair(3, std::string("9")));
  CHECK(coords(alpha_cycles[8][1]) == std::make_pair(3, std::string("9'")));
}

TEST_CASE("simple labelings") {
  // single edge: two vertices, one edge, no duplicates
  Hypermap edge(Permutation::identity(2), parse_cycles("(1,2)", 2));
  VertexEdgeLabeling lab = label_map(edge);
  CHECK(lab.vertex_count == 2);
  CHECK(lab.edge_count == 1);
  CHECK(!lab.edge_is_loop[0]);

  // one loop: the duplicate label appears
  Hypermap loop(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2));
  VertexEdgeLabeling lab2 = label_map(loop);
  CHECK(lab2.edge_is_loop[0]);
  CHECK(lab2.edge_label[0].to_string() == "1");
  CHECK(lab2.edge_label[1].to_string() == "1'");

  CHECK_THROWS_AS(label_map(Hypermap(parse_cycles("(1,2,3)", 3), parse_cycles("(1,2,3)", 3))),
                  precondition_error);
}

TEST_CASE("the worked example tree and its quoted fragments") {
  Hypermap h = example_map();
  Permutation theta = example_theta();
  LabeledPlaneTree t = span_to_tree(h, theta);
  CHECK(t.is_tree());
  CHECK(t.vertices.size() == 13);
  // the cycles of theta contained in the first cycle of sigma
  CHECK(t.canonical_form().find("1@(1)") != std::string::npos);
  CHECK(t.canonical_form().find("1@(2,4,3)") != std::string::npos);
  // the color-5 vertex reads ((5,1),(5,6),(5,5))
  CHECK(t.canonical_form().find("5@(1,6,5)") != std::string::npos);
  CHECK(tree_to_span(h, t) == theta);
}

TEST_CASE("the worked reduction move") {
  Hypermap h = example_map();
  LabeledPlaneTree t = span_to_tree(h, example_theta());
  // vertices 0 and 1 are the two color-1 centers
  REQUIRE(t.vertices[0].color == 1);
  REQUIRE(t.vertices[1].color == 1);
  auto merged = merge_step(h, t, 0, 1);
  REQUIRE(merged.has_value());
  // the merged color-1 vertex lists its edges (1,4,3,2)
  CHECK(merged->vertices[0].color == 1);
  CHECK(merged->vertices[0].edges ==
        std::vector<EdgeLabel>{{1, false}, {4, false}, {3, false}, {2, false}});
  CHECK(!merged->is_tree());

  // the unique cycle is the triangle with colors 1, 4, 5 and edges 1, 2, 6:
  // removing any one of those labels leaves a tree, removing others does not
  for (int j = 1; j <= 10; ++j) {
    LabeledPlaneTree cut = *merged;
    bool removed = false;
    for (auto& v : cut.vertices) {
      auto it = std::find(v.edges.begin(), v.edges.end(), EdgeLabel{j, false});
      if (it != v.edges.end()) {
        v.edges.erase(it);
        removed = true;
      }
    }
    REQUIRE(removed);
    // drop now-isolated vertices
    LabeledPlaneTree pruned;
    for (auto& v : cut.vertices)
      if (!v.edges.empty()) pruned.vertices.push_back(v);
    bool on_cycle = (j == 1 || j == 2 || j == 6);
    CHECK(pruned.is_tree() == on_cycle);
  }

  std::size_t c5 = 0;
  for (std::size_t v = 0; v < merged->vertices.size(); ++v)
    if (merged->vertices[v].color == 5) c5 = v;
  REQUIRE(merged->vertices[c5].edges ==
          std::vector<EdgeLabel>{{1, false}, {6, false}, {5, false}});

  // splitting ((5,1))((5,6),(5,5)) breaks the triangle
  LabeledPlaneTree r1 = reduction_move(h, t, ReductionMove{0, 1, c5, 0, 1});
  CHECK(r1.is_tree());
  CHECK(r1.canonical_form().find("5@(1)") != std::string::npos);
  CHECK(r1.canonical_form().find("5@(5,6)") != std::string::npos);

  // splitting ((5,1),(5,5))((5,6)) also breaks it
  LabeledPlaneTree r2 = reduction_move(h, t, ReductionMove{0, 1, c5, 1, 2});
  CHECK(r2.is_tree());
  CHECK(r2.canonical_form().find("5@(6)") != std::string::npos);
  CHECK(r2.canonical_form().find("5@(1,5)") != std::string::npos);

  // splitting off ((5,5)) keeps the triangle and strands the subtree
  CHECK_THROWS_WITH(reduction_move(h, t, ReductionMove{0, 1, c5, 0, 2}),
                    Catch::Matchers::ContainsSubstring("SplitLeavesCycle"));

  // both legal results are spanning hypertrees of the reciprocal
  CHECK(is_refinement(tree_to_span(h, r1), h.sigma()));
  CHECK(is_refinement(tree_to_span(h, r2), h.sigma()));
}

TEST_CASE("illegal merges are rejected") {
  Hypermap h = example_map();
  LabeledPlaneTree t = span_to_tree(h, example_theta());
  // different colors cannot merge
  CHECK_THROWS_WITH(reduction_move(h, t, ReductionMove{0, 2, 0, 0, 1}),
                    Catch::Matchers::ContainsSubstring("IllegalMerge"));
}

TEST_CASE("round trip over exhaustive and random maps") {
  std::vector<Hypermap> corpus;
  // all maps on n <= 6 points whose edges are perfect matchings
  for (int n = 2; n <= 6; n += 2) {
    for (const auto& sigma : hmtest::all_permutations(n)) {
      for (const auto& alpha : hmtest::all_permutations(n)) {
        bool invol = true;
        for (int x = 0; x < n && invol; ++x)
          invol = alpha(alpha(x)) == x && alpha(x) != x;
        if (!invol) continue;
        if (!is_transitive(sigma, alpha)) continue;
        corpus.emplace_back(sigma, alpha);
      }
    }
  }
  std::mt19937_64 rng(6464);
  for (int it = 0; it < 60; ++it) corpus.push_back(hmtest::random_map(8, rng, true));

  for (const auto& h : corpus) {
    Hypermap rec = h.reciprocal();
    std::set<std::string> image;
    long long count = 0;
    for (const auto& s : spanning_unicellular(rec, 0)) {
      LabeledPlaneTree t = span_to_tree(h, s.theta);
      CHECK(t.is_tree());
      CHECK(tree_to_span(h, t) == s.theta);
      image.insert(t.canonical_form());
      ++count;
    }
    CHECK(static_cast<long long>(image.size()) == count);
    CHECK(count == count_spanning_hypertrees(rec));
  }
}

TEST_CASE("splitting sequences reach exactly the reciprocal hypertrees") {
  std::vector<Hypermap> corpus = {
      Hypermap(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2)),
      Hypermap(parse_cycles("(1,2,3)(4,5,6)", 6), parse_cycles("(1,4)(2,5)(3,6)", 6)),
      Hypermap(parse_cycles("(1,3)(2,5)(4,6)", 6), parse_cycles("(1,2)(3,4)(5,6)", 6)),
  };
  std::mt19937_64 rng(12321);
  for (int it = 0; it < 12; ++it)
    corpus.push_back(hmtest::random_map(4 + 2 * static_cast<int>(rng() % 2), rng, true));

  for (const auto& h : corpus) {
    std::set<Permutation> reached;
    for (const auto& t : reachable_split_trees(h)) {
      CHECK(t.alpha() == h.alpha());
      reached.insert(t.sigma());
    }
    std::set<Permutation> expect;
    for (const auto& s : spanning_unicellular(h.reciprocal(), 0)) expect.insert(s.theta);
    CHECK(reached == expect);
  }

  // degenerate split of a 2-cycle vertex into two fixed points
  Hypermap loop(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2));
  Hypermap split = vertex_split(loop, 0, 1);
  CHECK(split.sigma() == Permutation::identity(2));
  CHECK_THROWS_AS(vertex_split(loop, 0, 0), precondition_error);
  Hypermap path(parse_cycles("(2,3)", 4), parse_cycles("(1,2)(3,4)", 4));
  CHECK_THROWS_WITH(vertex_split(path, 1, 2),
                    Catch::Matchers::ContainsSubstring("disconnects"));
}

TEST_CASE("cubic_count equals the reciprocal hypertree count") {
  // theta graph: two vertices, three parallel edges
  Hypermap theta_graph(parse_cycles("(1,2,3)(4,5,6)", 6), parse_cycles("(1,4)(2,5)(3,6)", 6));
  CHECK(cubic_count(theta_graph) == count_spanning_hypertrees(theta_graph.reciprocal()));
  CHECK(cubic_count(theta_graph) == 8);

  // the two rotations of the theta graph agree
  Hypermap other(parse_cycles("(1,2,3)(4,6,5)", 6), parse_cycles("(1,4)(2,5)(3,6)", 6));
  CHECK(cubic_count(other) == cubic_count(theta_graph));
  CHECK(count_spanning_hypertrees(other.reciprocal()) ==
        count_spanning_hypertrees(theta_graph.reciprocal()));

  // path with two edges
  Hypermap path(parse_cycles("(2,3)", 4), parse_cycles("(1,2)(3,4)", 4));
  CHECK(cubic_count(path) == 1);
  CHECK(count_spanning_hypertrees(path.reciprocal()) == 1);

  // loops are rejected
  CHECK_THROWS_AS(cubic_count(Hypermap(parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 2))),
                  precondition_error);

  // random loopless cubic-ish maps
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 25) {
    int n = 4 + 2 * static_cast<int>(rng() % 3);
    Hypermap h = hmtest::random_map(n, rng, true);
    bool ok = true;
    for (const auto& c : h.sigma().cycles())
      if (c.size() > 3) ok = false;
    for (const auto& c : h.alpha().cycles())
      if (h.sigma().same_cycle(c[0], c[1])) ok = false;
    if (!ok) continue;
    CHECK(cubic_count(h) == count_spanning_hypertrees(h.reciprocal()));
    ++done;
  }
}

TEST_CASE("reduction moves explore the tree set") {
  // desk-scale experiment: count how many trees the move graph reaches
  // from the first tree; connectivity is reported, not asserted
  std::mt19937_64 rng(989);
  int attempted = 0, connected = 0, total = 0;
  for (int it = 0; it < 6; ++it) {
    Hypermap h = hmtest::random_map(4 + 2 * (it % 2), rng, true);
    auto spans = spanning_unicellular(h.reciprocal(), 0);
    if (spans.size() < 2) continue;
    std::set<std::string> all;
    for (const auto& s : spans) all.insert(span_to_tree(h, s.theta).canonical_form());
    std::set<std::string> seen;
    std::vector<LabeledPlaneTree> queue = {span_to_tree(h, spans[0].theta)};
    seen.insert(queue[0].canonical_form());
    while (!queue.empty()) {
      LabeledPlaneTree cur = queue.back();
      queue.pop_back();
      for (auto& [mv, next] : legal_reduction_moves(h, cur))
        if (seen.insert(next.canonical_form()).second) queue.push_back(next);
    }
    ++attempted;
    ++total;
    if (seen == all) ++connected;
    // every reached tree is a genuine spanning hypertree encoding
    for (const auto& cf : seen) CHECK(all.count(cf) == 1);
  }
  INFO("move graph connected in " << connected << " of " << total << " experiments");
  CHECK(attempted > 0);
}
