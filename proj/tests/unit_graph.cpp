#include <doctest.h>

#include <stdexcept>

#include "cyclescope/constructions.hpp"
#include "cyclescope/enumerate.hpp"
#include "cyclescope/graph.hpp"
#include "oracles.hpp"

using namespace cyclescope;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph bowtie() {
  return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

}  // namespace

TEST_CASE("graph construction accepts and rejects per the contract") {
  Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle.adjacent(0, 2));

  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(4, {{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(Graph::kMaxVertices + 1, {}),
                  std::invalid_argument);
}

TEST_CASE("min_degree") {
  CHECK(min_degree(complete(5)) == 4);
  CHECK(min_degree(petersen()) == 3);
  CHECK(min_degree(complete_bipartite(4, 7)) == 4);
  CHECK(min_degree(Graph::from_edges(3, {})) == 0);
  CHECK_THROWS_AS(min_degree(Graph()), std::invalid_argument);
}

TEST_CASE("bipartition") {
  auto bp = bipartition(complete_bipartite(3, 4));
  REQUIRE(bp.has_value());
  int a = set_size(bp->side_a), b = set_size(bp->side_b);
  CHECK(std::min(a, b) == 3);
  CHECK(std::max(a, b) == 4);

  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
  CHECK_FALSE(bipartition(petersen()).has_value());

  // Disconnected graphs get a consistent per-component coloring.
  Graph two_paths = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto bp2 = bipartition(two_paths);
  REQUIRE(bp2.has_value());
  CHECK((bp2->side_a | bp2->side_b) == two_paths.vertex_mask());
  CHECK((bp2->side_a & bp2->side_b) == 0);
}

TEST_CASE("vertex connectivity on the named examples") {
  CHECK(vertex_connectivity(complete(6)) == 5);
  CHECK(vertex_connectivity(petersen()) == 3);
  CHECK(vertex_connectivity(bowtie()) == 1);
  CHECK(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(vertex_connectivity(complete_bipartite(4, 7)) == 4);
  CHECK_THROWS_AS(vertex_connectivity(Graph::from_edges(1, {})),
                  std::invalid_argument);
}

TEST_CASE("connectivity agrees with the brute-force cut oracle on n <= 6") {
  GraphFilter any;
  for (int n = 2; n <= 6; ++n)
    enumerate_graphs(n, any, [&](const Graph& g) {
      int cut = test::connectivity_oracle(g);
      CHECK(vertex_connectivity(g) == cut);
      CHECK(is_k_connected(g, cut));
      CHECK_FALSE(is_k_connected(g, cut + 1));
      return true;
    });
}

TEST_CASE("Menger: a cut-sized disjoint path packing exists at the worst pair") {
  GraphFilter connected;
  connected.connectivity_at_least = 1;
  for (int n = 3; n <= 6; ++n)
    enumerate_graphs(n, connected, [&](const Graph& g) {
      int kappa = vertex_connectivity(g);
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          if (!g.adjacent(x, y) && local_connectivity(g, x, y) == kappa) {
            CHECK(test::disjoint_paths_exist(g, x, y, kappa));
            return true;  // one worst pair per graph is enough here
          }
      return true;
    });
}

TEST_CASE("block decomposition") {
  SUBCASE("bowtie") {
    BlockDecomposition bd = block_decomposition(bowtie());
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == set_of(2));
    CHECK(bd.end_blocks.size() == 2);
    CHECK(bd.is_block_chain);
  }
  SUBCASE("path on 4 vertices") {
    BlockDecomposition bd = block_decomposition(path_graph(4));
    CHECK(bd.blocks.size() == 3);
    CHECK(set_size(bd.cut_vertices) == 2);
    CHECK(bd.end_blocks.size() == 2);
    CHECK(bd.is_block_chain);
  }
  SUBCASE("2-connected graph is its unique end block") {
    BlockDecomposition bd = block_decomposition(petersen());
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cut_vertices == 0);
    CHECK(bd.end_blocks == std::vector<int>{0});
    CHECK_FALSE(bd.is_block_chain);
  }
  SUBCASE("disconnected input is rejected") {
    CHECK_THROWS_AS(block_decomposition(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
  }
  SUBCASE("single vertex") {
    BlockDecomposition bd = block_decomposition(Graph::from_edges(1, {}));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.end_blocks == std::vector<int>{0});
  }
}

TEST_CASE("blocks partition the edges; two blocks share at most one vertex") {
  GraphFilter connected;
  connected.connectivity_at_least = 1;
  for (int n = 2; n <= 6; ++n)
    enumerate_graphs(n, connected, [&](const Graph& g) {
      BlockDecomposition bd = block_decomposition(g);
      long edge_total = 0;
      for (VertexSet b : bd.blocks) edge_total += g.induced(b).edge_count();
      CHECK(edge_total == g.edge_count());
      for (std::size_t i = 0; i < bd.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < bd.blocks.size(); ++j)
          CHECK(set_size(bd.blocks[i] & bd.blocks[j]) <= 1);
      // A vertex is a cut vertex iff it lies in at least two blocks.
      for (int v = 0; v < n; ++v) {
        int in_blocks = 0;
        for (VertexSet b : bd.blocks) in_blocks += set_contains(b, v);
        CHECK(set_contains(bd.cut_vertices, v) == (in_blocks >= 2));
      }
      return true;
    });
}

TEST_CASE("girth") {
  CHECK(girth(complete_bipartite(3, 3)) == 4);
  CHECK(girth(petersen()) == 5);
  CHECK_FALSE(girth(complete_bipartite(1, 5)).has_value());
  CHECK(girth(complete(3)) == 3);
  CHECK_FALSE(girth(path_graph(6)).has_value());
}

TEST_CASE("contract_set") {
  SUBCASE("two adjacent vertices of a 5-cycle give a 4-cycle") {
    Graph c4 = contract_set(cycle_graph(5), set_of(0) | set_of(1));
    CHECK(c4.order() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(test::brute_isomorphic(c4, cycle_graph(4)));
  }
  SUBCASE("contracting the inner pentagram of the Petersen graph") {
    // The component left by deleting the outer 5-cycle is the inner 5 set.
    VertexSet inner = 0;
    for (int v = 5; v < 10; ++v) inner |= set_of(v);
    Graph wheel = contract_set(petersen(), inner);
    CHECK(wheel.order() == 6);
    CHECK(is_k_connected(wheel, 3));
  }
  SUBCASE("singleton contraction is the identity up to isomorphism") {
    Graph g = bowtie();
    CHECK(test::brute_isomorphic(contract_set(g, set_of(3)), g));
  }
  SUBCASE("disconnected contraction set is rejected") {
    CHECK_THROWS_AS(contract_set(cycle_graph(5), set_of(0) | set_of(2)),
                    std::invalid_argument);
  }
}
