#include "cyclescope/enumerate.hpp"

#include <stdexcept>

#include "augment.hpp"

namespace cyclescope {

bool filter_passes(const GraphFilter& f, const Graph& g) {
  if (f.min_order && g.order() < *f.min_order) return false;
  if (f.min_degree && (g.order() == 0 || min_degree(g) < *f.min_degree))
    return false;
  if (f.connectivity_at_least) {
    int c = *f.connectivity_at_least;
    if (c == 1 ? !is_connected(g) : !is_k_connected(g, c)) return false;
  }
  if (f.bipartite != Tri::any) {
    bool bp = bipartition(g).has_value();
    if (f.bipartite == Tri::require ? !bp : bp) return false;
  }
  return true;
}

namespace {

bool raw_is_bipartite(const detail::RawGraph& g) {
  std::uint64_t colored = 0, side_a = 0;
  for (int root = 0; root < g.n; ++root) {
    if ((colored >> root) & 1u) continue;
    std::uint64_t level = std::uint64_t{1} << root;
    bool side = false;
    while (level) {
      if (!side) side_a |= level;
      colored |= level;
      std::uint64_t next = 0;
      for (std::uint64_t m = level; m; m &= m - 1)
        next |= g.adj[std::countr_zero(m)];
      level = next & ~colored;
      side = !side;
    }
  }
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t own = (side_a >> v) & 1u ? side_a : ~side_a;
    if (g.adj[v] & own) return false;
  }
  return true;
}

}  // namespace

long enumerate_graphs(int n, const GraphFilter& filter,
                      const std::function<bool(const Graph&)>& emit,
                      const EnumerateOptions& opt) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  if (n > kEnumerateOrderCap && !opt.override_cap)
    throw std::invalid_argument(
        "enumeration capped at order " + std::to_string(kEnumerateOrderCap) +
        "; pass the override to lift it");
  if (opt.num_parts < 1 || opt.part_index < 0 ||
      opt.part_index >= opt.num_parts)
    throw std::invalid_argument("bad enumeration partition");

  long emitted = 0;
  detail::ExpandHooks hooks;
  hooks.visit = [&](const detail::RawGraph& raw) {
    if (raw.n < n) return detail::VisitAction::descend;
    if (!emit) return detail::VisitAction::skip_subtree;
    Graph g = raw.to_graph();
    if (filter_passes(filter, g)) {
      ++emitted;
      if (!emit(g)) return detail::VisitAction::abort;
    }
    return detail::VisitAction::skip_subtree;
  };
  hooks.prune_child = [&](const detail::RawGraph& child) {
    if (filter.min_degree) {
      int slack = n - child.n;
      for (int v = 0; v < child.n; ++v)
        if (child.degree(v) + slack < *filter.min_degree) return true;
    }
    if (filter.bipartite == Tri::require && !raw_is_bipartite(child))
      return true;
    return false;
  };

  if (opt.num_parts == 1) {
    detail::expand(n, hooks);
    return emitted;
  }

  int split = std::min(detail::default_split_depth(n), n);
  detail::ExpandHooks prefix_hooks = hooks;
  prefix_hooks.visit = [&](const detail::RawGraph& raw) {
    // Prefix classes of order n (possible when split == n) belong to part 0.
    if (raw.n == n && opt.part_index != 0)
      return detail::VisitAction::skip_subtree;
    return hooks.visit(raw);
  };
  auto roots = detail::expand_prefix(n, split, prefix_hooks, true);
  for (std::size_t i = opt.part_index; i < roots.size(); i += opt.num_parts)
    if (!detail::expand_branch(roots[i], n, hooks)) break;
  return emitted;
}

}  // namespace cyclescope
