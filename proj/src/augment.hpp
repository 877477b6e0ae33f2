#pragma once

// Isomorph-free generation by canonical augmentation: a child on m+1
// vertices is kept iff deleting its canonical-deletion vertex gives back the
// parent's isomorphism class. The deletion rule picks, among the vertices of
// minimum degree, the one placed last by the canonical labeling; deleting
// minimum-degree vertices keeps the rule compatible with degree-bound
// pruning toward a target order. Children of one parent that land in the
// same class are deduplicated by their canonical code, so each class is
// produced exactly once overall.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cyclescope/canonical.hpp"
#include "cyclescope/graph.hpp"

namespace cyclescope::detail {

constexpr int kEngineMaxOrder = 16;

struct RawGraph {
  int n = 0;
  int edges = 0;
  std::array<std::uint64_t, kEngineMaxOrder> adj{};

  int degree(int v) const { return std::popcount(adj[v]); }
  int min_degree() const {
    int d = kEngineMaxOrder;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return n ? d : 0;
  }
  Graph to_graph() const {
    return Graph::from_neighbor_masks(
        n, std::span<const std::uint64_t>(adj.data(), n));
  }
};

/// Canonical code truncated to the two words enough for order <= 16.
struct Code2 {
  std::uint64_t a = 0, b = 0;
  int n = 0;
  friend bool operator==(const Code2&, const Code2&) = default;
  friend auto operator<=>(const Code2&, const Code2&) = default;
};

Code2 code_of(const RawGraph& g);

enum class VisitAction { descend, skip_subtree, abort };

struct ExpandHooks {
  /// Called once per visited class, any order. Root K1 included.
  std::function<VisitAction(const RawGraph&)> visit;
  /// Optional; returning true discards the child and its whole subtree.
  /// The caller is responsible for only pruning when no descendant matters.
  std::function<bool(const RawGraph& child)> prune_child;
  /// Try dense extensions first (useful for branch-and-bound searches).
  bool dense_first = false;
};

/// Expands the whole tree from K1 up to order n_max. False iff aborted.
bool expand(int n_max, const ExpandHooks& hooks);

/// Expands only up to split_depth, returning the classes at that order (the
/// branch roots) in deterministic order. When visit_prefix is false the
/// visit hook is not called (used to rebuild roots on resume).
std::vector<RawGraph> expand_prefix(int n_max, int split_depth,
                                    const ExpandHooks& hooks,
                                    bool visit_prefix);

/// Expands the subtree strictly below one branch root. False iff aborted.
bool expand_branch(const RawGraph& root, int n_max, const ExpandHooks& hooks);

int default_split_depth(int n_max);

}  // namespace cyclescope::detail
