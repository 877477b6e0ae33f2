#pragma once

#include <functional>
#include <optional>

#include "cyclescope/graph.hpp"

namespace cyclescope {

enum class Tri { any, require, forbid };

/// Hypothesis-side filter for enumeration and verification runs.
struct GraphFilter {
  std::optional<int> min_degree;
  std::optional<int> connectivity_at_least;  // 1 means connected
  Tri bipartite = Tri::any;
  std::optional<int> min_order;
};

bool filter_passes(const GraphFilter& f, const Graph& g);

inline constexpr int kEnumerateOrderCap = 12;

struct EnumerateOptions {
  bool override_cap = false;
  /// Deterministic partition of the generation tree for parallel consumers:
  /// part_index in [0, num_parts) takes every num_parts-th branch.
  int num_parts = 1;
  int part_index = 0;
};

/// Streams exactly one representative per isomorphism class of graphs on n
/// vertices passing the filter, in a deterministic order. Generation is by
/// canonical augmentation; min-degree and bipartite(require) filters prune
/// the tree soundly, everything else is tested on completed graphs. The
/// callback may return false to stop the stream. Returns the number of
/// graphs emitted before stopping.
long enumerate_graphs(int n, const GraphFilter& filter,
                      const std::function<bool(const Graph&)>& emit,
                      const EnumerateOptions& opt = {});

}  // namespace cyclescope
