#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#ifndef CYCLESCOPE_MAX_VERTICES
#define CYCLESCOPE_MAX_VERTICES 64
#endif

namespace cyclescope {

/// Vertex subset as a bitmask; bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet set_of(int v) { return VertexSet{1} << v; }

/// Lowest vertex in a nonempty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

/// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
/// one bitmask per vertex. The vertex cap is a build-time constant; raising
/// it must not change any result.
class Graph {
 public:
  static constexpr int kMaxVertices = CYCLESCOPE_MAX_VERTICES;
  static_assert(kMaxVertices >= 1 && kMaxVertices <= 64,
                "adjacency rows are single machine words");

  Graph() = default;

  /// Builds a graph from an explicit edge list. Rejects self-loops,
  /// duplicate edges, endpoints out of range and orders above the cap.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  /// Builds from per-vertex neighbor masks; the masks must already be
  /// symmetric and loop-free.
  static Graph from_neighbor_masks(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  /// Mask with one bit per vertex of the graph.
  VertexSet vertex_mask() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  /// Copy of this graph with one extra edge (no-op if already present).
  Graph with_edge(int u, int v) const;

  /// Induced subgraph on `keep`, vertices relabeled 0..|keep|-1 in
  /// increasing order of their old labels.
  Graph induced(VertexSet keep) const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

struct Bipartition {
  VertexSet side_a = 0;
  VertexSet side_b = 0;
};

/// Blocks (maximal subgraphs without a cut vertex) of a connected graph.
/// A 2-connected graph is a single block and counts as its own end block,
/// so end_blocks is then {0}. is_block_chain means exactly two end blocks.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
  std::vector<int> end_blocks;
  bool is_block_chain = false;
};

/// Minimum degree; 0 for an edgeless graph. Requires order >= 1.
int min_degree(const Graph& g);

bool is_connected(const Graph& g);

/// Number of connected components (0 for the empty graph).
int component_count(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);

/// Components of g restricted to `within` (other vertices treated as removed).
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);

/// Proper 2-coloring if the graph has no odd cycle; per-component coloring
/// for disconnected inputs (each component's smaller-labeled root on side a).
std::optional<Bipartition> bipartition(const Graph& g);

/// k-connectivity test: order >= k+1 and no vertex cut of size < k.
bool is_k_connected(const Graph& g, int k);

/// Largest k such that the graph is k-connected; K_n gives n-1 and a
/// disconnected graph gives 0. Requires order >= 2.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally disjoint (u,v)-paths, u != v.
int local_connectivity(const Graph& g, int u, int v);

/// Standard biconnected-component decomposition. Rejects disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

/// Length of a shortest cycle; absent for forests.
std::optional<int> girth(const Graph& g);

/// Contracts the (connected, nonempty) vertex set w to a single vertex.
/// Remaining vertices keep their relative order; the merged vertex is last.
Graph contract_set(const Graph& g, VertexSet w);

}  // namespace cyclescope
