#include "cyclescope/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclescope {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds the configured cap of " +
                                std::to_string(Graph::kMaxVertices));
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (g.adjacent(u, v)) throw std::invalid_argument("duplicate edge rejected");
    g.adj_[u] |= VertexSet{1} << v;
    g.adj_[v] |= VertexSet{1} << u;
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                            edges.size()));
}

Graph Graph::from_neighbor_masks(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("expected one adjacency row per vertex");
  Graph g;
  g.n_ = n;
  int deg_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~g.vertex_mask())
      throw std::invalid_argument("adjacency row mentions vertex out of range");
    if ((rows[v] >> v) & 1u) throw std::invalid_argument("self-loop rejected");
    g.adj_[v] = rows[v];
    deg_sum += std::popcount(rows[v]);
  }
  for (int v = 0; v < n; ++v)
    for (VertexSet m = g.adj_[v]; m; m &= m - 1)
      if (!g.adjacent(std::countr_zero(m), v))
        throw std::invalid_argument("adjacency rows are not symmetric");
  g.edge_count_ = deg_sum / 2;
  return g;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bad edge");
  Graph g = *this;
  if (!g.adjacent(u, v)) {
    g.adj_[u] |= VertexSet{1} << v;
    g.adj_[v] |= VertexSet{1} << u;
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertex_mask();
  std::array<int, kMaxVertices> new_label{};
  int m = 0;
  for (VertexSet s = keep; s; s &= s - 1) new_label[std::countr_zero(s)] = m++;
  Graph g;
  g.n_ = m;
  int deg_sum = 0;
  for (VertexSet s = keep; s; s &= s - 1) {
    int v = std::countr_zero(s);
    std::uint64_t row = 0;
    for (VertexSet t = adj_[v] & keep; t; t &= t - 1)
      row |= VertexSet{1} << new_label[std::countr_zero(t)];
    g.adj_[new_label[v]] = row;
    deg_sum += std::popcount(row);
  }
  g.edge_count_ = deg_sum / 2;
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edge_count_ != other.edge_count_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != other.adj_[v]) return false;
  return true;
}

int min_degree(const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("min_degree needs order >= 1");
  int d = Graph::kMaxVertices;
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

namespace {

// Bitmask BFS: all vertices of `within` reachable from `seed`.
VertexSet reach(const Graph& g, VertexSet seed, VertexSet within) {
  VertexSet seen = seed & within;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet m = frontier; m; m &= m - 1)
      next |= g.neighbors(std::countr_zero(m));
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  VertexSet all = g.vertex_mask();
  return reach(g, 1, all) == all;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertex_mask();
  while (left) {
    VertexSet c = reach(g, left & -left, left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertex_mask());
}

int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  VertexSet colored = 0;
  for (int root = 0; root < g.order(); ++root) {
    if (set_contains(colored, root)) continue;
    VertexSet level = set_of(root);
    bool side = false;
    while (level) {
      (side ? bp.side_b : bp.side_a) |= level;
      colored |= level;
      VertexSet next = 0;
      for (VertexSet m = level; m; m &= m - 1)
        next |= g.neighbors(std::countr_zero(m));
      level = next & ~colored;
      side = !side;
    }
  }
  // Valid iff no edge stays inside a side.
  for (int v = 0; v < g.order(); ++v) {
    VertexSet own = set_contains(bp.side_a, v) ? bp.side_a : bp.side_b;
    if (g.neighbors(v) & own) return std::nullopt;
  }
  return bp;
}

namespace {

// Max vertex-disjoint (s,t)-paths via unit-capacity flow on the split graph.
// Nodes 2v (in) and 2v+1 (out); stops early once `limit` paths are found.
int disjoint_paths(const Graph& g, int s, int t, int limit) {
  int n = g.order();
  std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? limit : 1;
  for (int u = 0; u < n; ++u)
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
      int v = std::countr_zero(m);
      cap[2 * u + 1][2 * v] = limit;
    }
  int src = 2 * s + 1, dst = 2 * t;
  int flow = 0;
  std::vector<int> prev(2 * n);
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[src] = src;
    std::vector<int> queue{src};
    for (std::size_t qi = 0; qi < queue.size() && prev[dst] < 0; ++qi) {
      int u = queue[qi];
      for (int v = 0; v < 2 * n; ++v)
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = u;
          queue.push_back(v);
        }
    }
    if (prev[dst] < 0) break;
    for (int v = dst; v != src; v = prev[v]) {
      cap[prev[v]][v] -= 1;
      cap[v][prev[v]] += 1;
    }
    ++flow;
  }
  return flow;
}

bool has_cut_vertex(const Graph& g) {
  VertexSet all = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet rest = all & ~set_of(v);
    if (!rest) continue;
    if (reach(g, rest & -rest, rest) != rest) return true;
  }
  return false;
}

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("local_connectivity needs u != v");
  return disjoint_paths(g, u, v, g.order());
}

bool is_k_connected(const Graph& g, int k) {
  int n = g.order();
  if (k <= 0) return n >= 1;
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  if (k == 2) return !has_cut_vertex(g);
  if (2 * g.edge_count() == n * (n - 1)) return true;  // complete
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && disjoint_paths(g, u, v, k) < k) return false;
  return true;
}

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("vertex_connectivity needs order >= 2");
  if (!is_connected(g)) return 0;
  if (2 * g.edge_count() == n * (n - 1)) return n - 1;
  int best = n - 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) best = std::min(best, disjoint_paths(g, u, v, best + 1));
  return best;
}

namespace {

struct BlockDfs {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
  int time = 0;

  explicit BlockDfs(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void pop_block(std::pair<int, int> until) {
    VertexSet vs = 0;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      vs |= set_of(e.first) | set_of(e.second);
      if (e == until) break;
    }
    blocks.push_back(vs);
  }

  void run(int u, int parent) {
    disc[u] = low[u] = time++;
    int children = 0;
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (v == parent) continue;
      if (disc[v] < 0) {
        ++children;
        edge_stack.push_back({u, v});
        run(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent < 0 && children > 1) || (parent >= 0 && low[v] >= disc[u])) {
          cuts |= set_of(u);
          pop_block({u, v});
        } else if (parent < 0 && low[v] >= disc[u]) {
          pop_block({u, v});
        }
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("block_decomposition needs a connected graph");
  BlockDecomposition bd;
  if (g.order() == 1) {
    bd.blocks = {set_of(0)};
    bd.end_blocks = {0};
    return bd;
  }
  BlockDfs dfs(g);
  dfs.run(0, -1);
  if (!dfs.edge_stack.empty()) dfs.pop_block(dfs.edge_stack.front());
  bd.blocks = std::move(dfs.blocks);
  bd.cut_vertices = dfs.cuts;
  for (int i = 0; i < static_cast<int>(bd.blocks.size()); ++i)
    if (set_size(bd.blocks[i] & bd.cut_vertices) == 1) bd.end_blocks.push_back(i);
  if (bd.blocks.size() == 1) bd.end_blocks = {0};
  bd.is_block_chain = bd.end_blocks.size() == 2;
  return bd;
}

std::optional<int> girth(const Graph& g) {
  int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    std::vector<int> queue{r};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (2 * dist[u] >= best) break;
      for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

Graph contract_set(const Graph& g, VertexSet w) {
  w &= g.vertex_mask();
  if (!w) throw std::invalid_argument("contract_set needs a nonempty set");
  if (reach(g, w & -w, w) != w)
    throw std::invalid_argument("contract_set needs the set to induce a connected subgraph");
  int n = g.order();
  int merged = n - set_size(w);  // new label of the contracted vertex
  std::array<int, Graph::kMaxVertices> new_label{};
  int next = 0;
  for (int v = 0; v < n; ++v)
    new_label[v] = set_contains(w, v) ? merged : next++;
  std::vector<std::uint64_t> rows(merged + 1, 0);
  for (int u = 0; u < n; ++u)
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
      int v = std::countr_zero(m);
      int a = new_label[u], b = new_label[v];
      if (a == b) continue;
      rows[a] |= VertexSet{1} << b;
      rows[b] |= VertexSet{1} << a;
    }
  return Graph::from_neighbor_masks(merged + 1, rows);
}

}  // namespace cyclescope
