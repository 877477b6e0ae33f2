#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cyclescope/canonical.hpp"
#include "cyclescope/constructions.hpp"
#include "cyclescope/spectrum.hpp"
#include "oracles.hpp"

using namespace cyclescope;

namespace {

std::set<int> lengths_of(const Graph& g) { return cycle_spectrum(g).lengths; }

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(complete(1).edge_count() == 0);
  CHECK(complete(4).edge_count() == 6);
  CHECK(lengths_of(complete(4)) == std::set<int>{3, 4});
  APFamily f = max_admissible_family(complete(6));
  CHECK(f.count == 4);
  CHECK(f.first == 3);
}

TEST_CASE("complete bipartite graphs, with and without an edge") {
  CHECK(lengths_of(complete_bipartite(2, 3)) == std::set<int>{4});
  CHECK(lengths_of(complete_bipartite(3, 3, true)) == std::set<int>{4, 6});
  CHECK(lengths_of(complete_bipartite(1, 5)).empty());
  CHECK(complete_bipartite(3, 3, true).edge_count() == 8);
}

TEST_CASE("petersen graph basics") {
  Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(girth(p) == 5);
  CHECK(vertex_connectivity(p) == 3);
}

TEST_CASE("hypo-Petersen family") {
  CHECK(canonical_code(hypo_petersen({})) == canonical_code(petersen()));
  Graph one = hypo_petersen({1});
  CHECK(one.order() == 11);
  std::set<int> s1 = lengths_of(one);
  for (int len : {5, 6, 7, 8, 9}) CHECK(s1.count(len) == 1);
  Graph full = hypo_petersen({1, 2, 3, 4, 5});
  CHECK(full.order() == 15);
  std::set<int> s5 = lengths_of(full);
  for (int len : {5, 6, 7, 8, 9}) CHECK(s5.count(len) == 1);
  CHECK_THROWS_AS(hypo_petersen({0}), std::invalid_argument);
  CHECK_THROWS_AS(hypo_petersen({6}), std::invalid_argument);
}

TEST_CASE("rotating a split set gives an isomorphic hypo-Petersen graph") {
  for (const std::set<int>& split :
       {std::set<int>{1}, std::set<int>{1, 3}, std::set<int>{1, 2, 4}}) {
    std::set<int> rotated;
    for (int i : split) rotated.insert(i % 5 + 1);
    CHECK(canonical_code(hypo_petersen(split)) ==
          canonical_code(hypo_petersen(rotated)));
  }
}

TEST_CASE("f_graph") {
  MarkedGraph f1 = f_graph(1);
  CHECK(f1.graph.order() == 5);
  CHECK(test::brute_isomorphic(
      f1.graph, Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
  CHECK(lengths_of(f_graph(2).graph) == std::set<int>{5, 6});
  MarkedGraph f3 = f_graph(3);
  CHECK(f3.graph.order() == 9);
  CHECK(f3.graph.degree(f3.mark("x1")) == 4);
  CHECK(f3.graph.degree(f3.mark("x2")) == 4);
  // Triangle- and 4-cycle-free for all small r.
  for (int r = 1; r <= 4; ++r) CHECK(girth(f_graph(r).graph) >= 5);
}

TEST_CASE("l_construction") {
  MarkedGraph l1 = l_construction(1);
  CHECK(l1.graph.order() == 4);
  CHECK(l1.graph.edge_count() == 5);
  CHECK(path_spectrum(l1.graph, l1.mark("x"), l1.mark("y")).lengths ==
        std::set<int>{2, 3});
  CHECK(lengths_of(l1.graph) == std::set<int>{3, 4});

  MarkedGraph l4 = l_construction(4);
  CHECK(l4.graph.order() == 6);
  CHECK(path_spectrum(l4.graph, l4.mark("x"), l4.mark("y")).lengths ==
        std::set<int>{4, 5});

  // No length 2 mod 4 and no path pair differing by 2 mod 4, in any gadget.
  for (int i = 1; i <= 4; ++i) {
    MarkedGraph li = l_construction(i);
    for (int len : lengths_of(li.graph)) CHECK(len % 4 != 2);
    auto ps = path_spectrum(li.graph, li.mark("x"), li.mark("y")).lengths;
    for (int a : ps)
      for (int b : ps) CHECK((b - a - 2) % 4 != 0);
  }
  CHECK_THROWS_AS(l_construction(0), std::invalid_argument);
  CHECK_THROWS_AS(l_construction(5), std::invalid_argument);
}

TEST_CASE("theta graphs") {
  MarkedGraph t = theta_graph(2, 2, 2);
  CHECK(test::brute_isomorphic(t.graph, complete_bipartite(2, 3)));
  CHECK(lengths_of(t.graph) == std::set<int>{4});
  CHECK(lengths_of(theta_graph(1, 2, 2).graph) == std::set<int>{3, 4});
  CHECK(lengths_of(theta_graph(3, 3, 5).graph) == std::set<int>{6, 8});
  CHECK_THROWS_AS(theta_graph(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(theta_graph(1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(theta_graph(3, 2, 4), std::invalid_argument);
}

TEST_CASE("combine_count formulas") {
  CHECK(combine_count(3, 1, 2, 1) == 4);
  CHECK(combine_count(3, 2, 2, 1) == 6);
  CHECK(combine_count(1, 1, 1, 2) == 1);
  CHECK(combine_count(2, 2, 3, 2) == 4);
  CHECK(combine_count(2, 1, 3, 2) == 6);
  // Singleton progressions conform to both differences, so the mixed bonus
  // only applies when the difference-1 side has at least two terms.
  CHECK(combine_count(3, 2, 1, 1) == 3);
  CHECK(combine_count(1, 1, 3, 2) == 3);
  CHECK_THROWS_AS(combine_count(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(combine_count(1, 3, 1, 1), std::invalid_argument);
}

TEST_CASE("concatenation soundness over randomized assemblies") {
  // Assemble a generalized theta graph: s internal path lengths in
  // progression A, t external path lengths in progression B (first >= 2).
  // The whole graph must then carry at least combine_count(s,.,t,.)
  // admissible cycles.
  std::mt19937 rng(40923);
  for (int round = 0; round < 100; ++round) {
    int s = 1 + static_cast<int>(rng() % 4);
    int t = 1 + static_cast<int>(rng() % 4);
    int da = 1 + static_cast<int>(rng() % 2);
    int db = 1 + static_cast<int>(rng() % 2);
    int a1 = 1 + static_cast<int>(rng() % 4);
    int b1 = 2 + static_cast<int>(rng() % 4);
    // One internally disjoint hub-to-hub path per progression member;
    // duplicate lengths across A and B become parallel paths. Only the
    // length-1 edge cannot repeat, and only A can contain it, once.
    std::vector<int> lens;
    for (int i = 0; i < s; ++i) lens.push_back(a1 + i * da);
    for (int j = 0; j < t; ++j) lens.push_back(b1 + j * db);
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : lens) {
      if (len == 1) {
        edges.push_back({0, 1});
        continue;
      }
      int prev = 0;
      for (int step = 1; step < len; ++step) {
        edges.push_back({prev, next});
        prev = next++;
      }
      edges.push_back({prev, 1});
    }
    Graph g = Graph::from_edges(next, edges);
    SpectrumOptions opt;
    opt.override_cap = true;
    std::uint64_t mask = cycle_spectrum(g, opt).length_mask();
    CHECK(max_admissible_count(mask) >= combine_count(s, da, t, db));
  }
}
