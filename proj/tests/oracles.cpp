#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cyclescope/canonical.hpp"

namespace cyclescope::test {

namespace {

// Hamiltonian-cycle DFS over a fixed support: anchor at the least vertex,
// extend in any order, close back to the anchor.
bool ham_dfs(const Graph& g, VertexSet support, int anchor, int v,
             VertexSet visited) {
  if (visited == support) return g.adjacent(v, anchor);
  for (VertexSet m = g.neighbors(v) & support & ~visited; m; m &= m - 1) {
    int u = std::countr_zero(m);
    if (ham_dfs(g, support, anchor, u, visited | set_of(u))) return true;
  }
  return false;
}

}  // namespace

bool subset_has_hamiltonian_cycle(const Graph& g, VertexSet support) {
  if (set_size(support) < 3) return false;
  int anchor = first_vertex(support);
  return ham_dfs(g, support, anchor, anchor, set_of(anchor));
}

std::set<int> spectrum_oracle(const Graph& g) {
  std::set<int> lengths;
  VertexSet all = g.vertex_mask();
  for (VertexSet s = 0;; s = (s - all) & all) {
    if (set_size(s) >= 3 && !lengths.count(set_size(s)) &&
        subset_has_hamiltonian_cycle(g, s))
      lengths.insert(set_size(s));
    if (s == all) break;
  }
  return lengths;
}

std::vector<VertexSet> cycle_supports_oracle(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet all = g.vertex_mask();
  for (VertexSet s = 0;; s = (s - all) & all) {
    if (set_size(s) >= 3 && subset_has_hamiltonian_cycle(g, s)) out.push_back(s);
    if (s == all) break;
  }
  return out;
}

namespace {

void path_dfs(const Graph& g, int v, int y, VertexSet visited, int len,
              std::set<int>& lengths) {
  if (v == y) {
    lengths.insert(len);
    return;
  }
  for (VertexSet m = g.neighbors(v) & ~visited; m; m &= m - 1) {
    int u = std::countr_zero(m);
    path_dfs(g, u, y, visited | set_of(u), len + 1, lengths);
  }
}

}  // namespace

std::set<int> path_spectrum_oracle(const Graph& g, int x, int y) {
  std::set<int> lengths;
  path_dfs(g, x, y, set_of(x), 0, lengths);
  return lengths;
}

int connectivity_oracle(const Graph& g) {
  int n = g.order();
  if (!is_connected(g)) return 0;
  VertexSet all = g.vertex_mask();
  int best = n - 1;
  for (VertexSet s = 0;; s = (s - all) & all) {
    int size = set_size(s);
    if (size < best && size <= n - 2) {
      VertexSet rest = all & ~s;
      if (set_size(rest) >= 2 &&
          components_within(g, rest).size() > 1)
        best = size;
    }
    if (s == all) break;
  }
  return best;
}

namespace {

bool pack_paths(const Graph& g, int x, int y, int k, VertexSet blocked,
                bool direct_edge_used);

// Extends one (x,y)-path whose internals avoid `blocked`, then recurses into
// the packing search for the remaining k-1 paths. `internals` holds this
// path's interior so far; only the interior-free direct edge can repeat, and
// it may be used at most once.
bool pack_extend(const Graph& g, int x, int y, int k, VertexSet blocked,
                 bool direct_edge_used, int v, VertexSet internals) {
  VertexSet cand = g.neighbors(v) & ~blocked & ~internals & ~set_of(x);
  for (VertexSet m = cand; m; m &= m - 1) {
    int u = std::countr_zero(m);
    if (u == y) {
      if (internals == 0 && direct_edge_used) continue;
      if (pack_paths(g, x, y, k - 1, blocked | internals,
                     direct_edge_used || internals == 0))
        return true;
    } else if (pack_extend(g, x, y, k, blocked, direct_edge_used, u,
                           internals | set_of(u))) {
      return true;
    }
  }
  return false;
}

bool pack_paths(const Graph& g, int x, int y, int k, VertexSet blocked,
                bool direct_edge_used) {
  if (k <= 0) return true;
  return pack_extend(g, x, y, k, blocked, direct_edge_used, x, 0);
}

}  // namespace

bool disjoint_paths_exist(const Graph& g, int x, int y, int k) {
  return pack_paths(g, x, y, k, 0, false);
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
  int pairs = n * (n - 1) / 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if ((bits >> idx) & 1u) edges.push_back({u, v});
    fn(Graph::from_edges(n, edges));
  }
}

long labeled_class_count(int n, const std::function<bool(const Graph&)>& keep) {
  std::set<std::string> codes;
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (!keep || keep(g)) codes.insert(canonical_code(g).bytes);
  });
  return static_cast<long>(codes.size());
}

int turan_oracle(int n, int ell, int k) {
  int best = -1;
  for_each_labeled_graph(n, [&](const Graph& g) {
    if (g.edge_count() <= best) return;
    for (int len : spectrum_oracle(g))
      if (len % k == ell) return;
    best = g.edge_count();
  });
  return best;
}

}  // namespace cyclescope::test
