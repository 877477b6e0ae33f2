#include <doctest.h>

#include <random>
#include <stdexcept>
#include <thread>

#include "cyclescope/constructions.hpp"
#include "cyclescope/enumerate.hpp"
#include "cyclescope/spectrum.hpp"
#include "oracles.hpp"

using namespace cyclescope;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

std::set<int> lengths_of(const Graph& g) { return cycle_spectrum(g).lengths; }

void check_witnesses(const Graph& g, const Spectrum& s) {
  for (const auto& [len, cert] : s.witnesses) {
    CHECK(validate_cycle(g, cert));
    CHECK(cert.length() == len);
  }
}

}  // namespace

TEST_CASE("cycle spectrum on the named examples") {
  CHECK(lengths_of(cycle_graph(7)) == std::set<int>{7});
  CHECK(lengths_of(complete(4)) == std::set<int>{3, 4});
  CHECK(lengths_of(petersen()) == std::set<int>{5, 6, 8, 9});
  CHECK(lengths_of(complete_bipartite(1, 5)).empty());
}

TEST_CASE("cycle spectrum equals the subset-Hamiltonian oracle on n <= 6") {
  GraphFilter any;
  for (int n = 3; n <= 6; ++n)
    enumerate_graphs(n, any, [&](const Graph& g) {
      Spectrum s = cycle_spectrum(g);
      CHECK(s.lengths == test::spectrum_oracle(g));
      CHECK(s.exhaustive);
      check_witnesses(g, s);
      return true;
    });
}

TEST_CASE("early exit stops once the requested residues are witnessed") {
  SpectrumOptions opt;
  opt.stop_when = {{3, 0}};
  Spectrum s = cycle_spectrum(complete(8), opt);
  bool hit = false;
  for (int len : s.lengths) hit |= len % 3 == 0;
  CHECK(hit);

  // Residues that do not occur force a full search.
  opt.stop_when = {{3, 1}};
  Spectrum full = cycle_spectrum(petersen(), opt);
  CHECK(full.exhaustive);
  CHECK(full.lengths == std::set<int>{5, 6, 8, 9});
}

TEST_CASE("the order cap guards full searches only") {
  Graph big = complete_bipartite(9, 9);
  CHECK_THROWS_AS(cycle_spectrum(big), std::invalid_argument);
  SpectrumOptions lifted;
  lifted.override_cap = true;
  CHECK(cycle_spectrum(big, lifted).lengths.count(4) == 1);
  SpectrumOptions bounded;
  bounded.stop_when = {{2, 0}};
  CHECK_FALSE(cycle_spectrum(big, bounded).lengths.empty());
}

TEST_CASE("path spectrum") {
  Graph k33 = complete_bipartite(3, 3);
  CHECK(path_spectrum(k33, 0, 3).lengths == std::set<int>{1, 3, 5});
  CHECK(path_spectrum(k33, 0, 1).lengths == std::set<int>{2, 4});
  CHECK(path_spectrum(cycle_graph(6), 0, 3).lengths == std::set<int>{3});
  CHECK_THROWS_AS(path_spectrum(k33, 2, 2), std::invalid_argument);

  GraphFilter connected;
  connected.connectivity_at_least = 1;
  for (int n = 3; n <= 5; ++n)
    enumerate_graphs(n, connected, [&](const Graph& g) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          PathSpectrum ps = path_spectrum(g, x, y);
          CHECK(ps.lengths == test::path_spectrum_oracle(g, x, y));
          for (const auto& [len, cert] : ps.witnesses) {
            CHECK(validate_path(g, cert));
            CHECK(cert.length() == len);
            CHECK(cert.vertices.front() == x);
            CHECK(cert.vertices.back() == y);
          }
        }
      return true;
    });
}

TEST_CASE("has_cycle_mod") {
  CHECK_FALSE(has_cycle_mod(petersen(), 1, 3).has_value());
  CHECK_FALSE(has_cycle_mod(complete(5), 2, 4).has_value());
  auto cert = has_cycle_mod(complete_bipartite(3, 3), 0, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->length() == 6);
  CHECK(validate_cycle(complete_bipartite(3, 3), *cert));

  GraphFilter any;
  for (int n = 3; n <= 6; ++n)
    enumerate_graphs(n, any, [&](const Graph& g) {
      std::set<int> lens = test::spectrum_oracle(g);
      for (int k = 1; k <= 5; ++k)
        for (int ell = 0; ell < k; ++ell) {
          bool expect = false;
          for (int len : lens) expect |= len % k == ell;
          CHECK(has_cycle_mod(g, ell, k).has_value() == expect);
        }
      return true;
    });
}

TEST_CASE("residue coverage") {
  ResidueCoverage rc = residue_coverage(complete_bipartite(4, 4), 5);
  CHECK(rc.residues == std::set<int>{1, 3, 4});
  CHECK_FALSE(rc.all_covered);
  CHECK_FALSE(rc.all_even_covered);

  rc = residue_coverage(complete(6), 3);
  CHECK(rc.residues == std::set<int>{0, 1, 2});
  CHECK(rc.all_covered);
  CHECK(rc.all_even_covered);

  rc = residue_coverage(cycle_graph(8), 4);
  CHECK(rc.residues == std::set<int>{0});
  CHECK_FALSE(rc.all_covered);

  // For odd k every residue class contains even integers.
  CHECK(even_residues(5) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(even_residues(6) == std::vector<int>{0, 2, 4});
}

TEST_CASE("maximum admissible cycle family") {
  APFamily f = max_admissible_family(complete(5));
  CHECK(f.count == 3);
  CHECK(f.first == 3);
  CHECK(f.difference == 1);

  f = max_admissible_family(complete_bipartite(4, 5));
  CHECK(f.count == 3);
  CHECK(f.first == 4);
  CHECK(f.difference == 2);

  f = max_admissible_family(petersen());
  CHECK(f.count == 2);
  CHECK(f.first == 5);
  CHECK(f.difference == 1);
  for (const auto& w : f.witnesses) CHECK(validate_cycle(petersen(), w));

  CHECK_THROWS_AS(max_admissible_family(complete_bipartite(1, 4)),
                  std::invalid_argument);
}

TEST_CASE("maximum admissible path family needs first length >= 2") {
  MarkedGraph l1 = l_construction(1);
  PathAPFamily f = max_admissible_path_family(l1.graph, l1.mark("x"), l1.mark("y"));
  CHECK(f.count == 2);
  CHECK(f.first == 2);
  CHECK(f.difference == 1);

  Graph k33 = complete_bipartite(3, 3);
  f = max_admissible_path_family(k33, 0, 3);
  CHECK(f.count == 2);
  CHECK(f.first == 3);
  CHECK(f.difference == 2);

  Graph edge = Graph::from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(max_admissible_path_family(edge, 0, 1), std::invalid_argument);
}

TEST_CASE("family count is monotone under edge addition") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> all_pairs, some;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
    std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
    std::size_t cut = rng() % all_pairs.size();
    Graph h = Graph::from_edges(
        n, std::span<const std::pair<int, int>>(all_pairs.data(), cut));
    Graph g = h;
    for (std::size_t i = cut; i < all_pairs.size(); ++i)
      if (rng() % 2) g = g.with_edge(all_pairs[i].first, all_pairs[i].second);
    std::uint64_t hm = cycle_spectrum(h).length_mask();
    std::uint64_t gm = cycle_spectrum(g).length_mask();
    CHECK(max_admissible_count(gm) >= max_admissible_count(hm));
  }
}

TEST_CASE("bipartite spectra give difference-2 families") {
  GraphFilter bip;
  bip.bipartite = Tri::require;
  for (int n = 4; n <= 7; ++n)
    enumerate_graphs(n, bip, [&](const Graph& g) {
      if (cycle_spectrum(g).lengths.empty()) return true;
      APFamily f = max_admissible_family(g);
      if (f.count > 1) CHECK(f.difference == 2);
      for (int len : cycle_spectrum(g).lengths) CHECK(len % 2 == 0);
      return true;
    });
}

TEST_CASE("every witness lies inside one block") {
  GraphFilter connected;
  connected.connectivity_at_least = 1;
  for (int n = 4; n <= 6; ++n)
    enumerate_graphs(n, connected, [&](const Graph& g) {
      BlockDecomposition bd = block_decomposition(g);
      for (const auto& [len, cert] : cycle_spectrum(g).witnesses) {
        VertexSet support = 0;
        for (int v : cert.vertices) support |= set_of(v);
        bool inside_one = false;
        for (VertexSet b : bd.blocks) inside_one |= (support & ~b) == 0;
        CHECK(inside_one);
      }
      return true;
    });
}

TEST_CASE("diagonal classification") {
  CycleCertificate c10{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  CHECK(classify_cycle_pair(c10, 0, 5) ==
        std::pair<int, DiagonalClass>{5, DiagonalClass::diagonal});
  CHECK(classify_cycle_pair(c10, 0, 4) ==
        std::pair<int, DiagonalClass>{4, DiagonalClass::quasi_diagonal});
  CHECK(classify_cycle_pair(c10, 0, 3) ==
        std::pair<int, DiagonalClass>{3, DiagonalClass::sub_quasi_diagonal});
  CHECK(classify_cycle_pair(c10, 0, 2) ==
        std::pair<int, DiagonalClass>{2, DiagonalClass::other});

  CycleCertificate c9{{0, 1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(classify_cycle_pair(c9, 0, 4) ==
        std::pair<int, DiagonalClass>{4, DiagonalClass::quasi_diagonal});
  CHECK(classify_cycle_pair(c9, 0, 3) ==
        std::pair<int, DiagonalClass>{3, DiagonalClass::other});
  CHECK_THROWS_AS(classify_cycle_pair(c9, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_cycle_pair(c9, 0, 12), std::invalid_argument);
}

TEST_CASE("qdi graph shapes") {
  auto ring = [](int n) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    return CycleCertificate{vs};
  };
  CHECK(test::brute_isomorphic(qdi_graph(ring(8)), cycle_graph(8)));
  CHECK(test::brute_isomorphic(qdi_graph(ring(5)), cycle_graph(5)));
  Graph q10 = qdi_graph(ring(10));
  CHECK(component_count(q10) == 2);
  for (VertexSet comp : components(q10))
    CHECK(test::brute_isomorphic(q10.induced(comp), cycle_graph(5)));
  // 2-regular for every length >= 5
  for (int len = 5; len <= 12; ++len) {
    Graph q = qdi_graph(ring(len));
    for (int v = 0; v < len; ++v) CHECK(q.degree(v) == 2);
  }
  CHECK_THROWS_AS(qdi_graph(ring(4)), std::invalid_argument);
}

TEST_CASE("spectrum cache serves isomorphic graphs with remapped witnesses") {
  SpectrumCache cache;
  SpectrumOptions opt;
  opt.cache = &cache;
  Spectrum s1 = cycle_spectrum(petersen(), opt);
  CHECK(cache.size() == 1);

  // A relabeled Petersen graph must hit the cache and still validate.
  std::vector<std::pair<int, int>> edges;
  std::vector<int> perm{3, 8, 1, 9, 0, 5, 7, 2, 6, 4};
  Graph p = petersen();
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (p.adjacent(u, v)) edges.push_back({perm[u], perm[v]});
  Graph relabeled = Graph::from_edges(10, edges);
  Spectrum s2 = cycle_spectrum(relabeled, opt);
  CHECK(cache.size() == 1);
  CHECK(s2.lengths == s1.lengths);
  check_witnesses(relabeled, s2);
}

TEST_CASE("spectrum cache tolerates concurrent use") {
  SpectrumCache cache;
  auto work = [&] {
    for (int i = 0; i < 20; ++i) {
      SpectrumOptions opt;
      opt.cache = &cache;
      Spectrum s = cycle_spectrum(petersen(), opt);
      CHECK(s.lengths == std::set<int>{5, 6, 8, 9});
    }
  };
  std::thread a(work), b(work);
  a.join();
  b.join();
  CHECK(cache.size() == 1);
}

TEST_CASE("probe answers residue and family queries lazily") {
  SpectrumProbe probe(petersen());
  probe.ensure_targets({{3, 0}, {3, 2}});
  CHECK(probe.has_cycle_mod(3, 0));
  CHECK(probe.has_cycle_mod(3, 2));
  CHECK_FALSE(probe.has_cycle_mod(3, 1));
  CHECK(probe.complete());
  CHECK(probe.has_admissible_family(2));
  CHECK_FALSE(probe.has_admissible_family(3));
}
