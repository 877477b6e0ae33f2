#include "augment.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclescope::detail {

namespace {

Code2 to_code2(const CanonWords& w) { return Code2{w.w[0], w.w[1], w.n}; }

RawGraph delete_vertex(const RawGraph& g, int w) {
  RawGraph out;
  out.n = g.n - 1;
  for (int v = 0, nv = 0; v < g.n; ++v) {
    if (v == w) continue;
    std::uint64_t row = g.adj[v] & ~(std::uint64_t{1} << w);
    // compact the bit positions above w
    std::uint64_t low = row & ((std::uint64_t{1} << w) - 1);
    out.adj[nv++] = low | ((row >> 1) & ~((std::uint64_t{1} << w) - 1));
    out.edges += std::popcount(out.adj[nv - 1]);
  }
  out.edges /= 2;
  return out;
}

// Subsets of an m-bit ground set, densest first, value order within a size.
const std::vector<std::uint32_t>& dense_first_subsets(int m) {
  static const auto tables = [] {
    std::array<std::vector<std::uint32_t>, kEngineMaxOrder> all;
    for (int mm = 0; mm < kEngineMaxOrder; ++mm) {
      all[mm].reserve(std::size_t{1} << mm);
      for (int pc = mm; pc >= 0; --pc)
        for (std::uint32_t s = 0; s < (1u << mm); ++s)
          if (std::popcount(s) == pc) all[mm].push_back(s);
    }
    return all;
  }();
  return tables[m];
}

struct Expander {
  const ExpandHooks& hooks;
  bool aborted = false;
  int stop_order;                 // do not descend below this order
  std::vector<RawGraph>* roots;   // collected when leaving at stop_order
  bool visit_enabled = true;
  std::array<std::vector<Code2>, kEngineMaxOrder + 1> seen_by_level;

  Expander(const ExpandHooks& h, int stop, std::vector<RawGraph>* sink,
           bool visit)
      : hooks(h), stop_order(stop), roots(sink), visit_enabled(visit) {}

  // Returns the child's code when the augmentation is canonical.
  bool accept_child(const RawGraph& child, const Code2& parent_code,
                    Code2* child_code) {
    int added = child.n - 1;
    int dnew = child.degree(added);
    for (int v = 0; v < added; ++v)
      if (child.degree(v) < dnew) return false;  // added vertex must be min degree
    CanonLabeling cl = canonical_labeling(child.n, child.adj.data());
    int delta = dnew;  // = min degree of child
    int w = -1;
    for (int pos = child.n - 1; pos >= 0 && w < 0; --pos)
      if (child.degree(cl.lab[pos]) == delta) w = cl.lab[pos];
    if (w != added) {
      if (code_of(delete_vertex(child, w)) != parent_code) return false;
    }
    *child_code = to_code2(cl.code);
    return true;
  }

  void dfs(const RawGraph& g, const Code2& gcode) {
    if (aborted) return;
    if (visit_enabled) {
      VisitAction act = hooks.visit(g);
      if (act == VisitAction::abort) {
        aborted = true;
        return;
      }
      if (act == VisitAction::skip_subtree) return;
    }
    if (g.n == stop_order) {
      if (roots) roots->push_back(g);
      return;
    }
    expand_children(g, gcode);
  }

  void expand_children(const RawGraph& g, const Code2& gcode) {
    int m = g.n;
    auto& seen = seen_by_level[m];
    seen.clear();
    const std::vector<std::uint32_t>* order =
        hooks.dense_first ? &dense_first_subsets(m) : nullptr;
    for (std::uint32_t idx = 0; idx < (1u << m) && !aborted; ++idx) {
      std::uint32_t s = order ? (*order)[idx] : idx;
      RawGraph child = g;
      child.n = m + 1;
      child.adj[m] = s;
      child.edges += std::popcount(s);
      for (std::uint32_t bits = s; bits; bits &= bits - 1)
        child.adj[std::countr_zero(bits)] |= std::uint64_t{1} << m;
      if (hooks.prune_child && hooks.prune_child(child)) continue;
      Code2 ccode;
      if (!accept_child(child, gcode, &ccode)) continue;
      if (std::find(seen.begin(), seen.end(), ccode) != seen.end()) continue;
      seen.push_back(ccode);
      dfs(child, ccode);
    }
  }
};

RawGraph single_vertex() {
  RawGraph g;
  g.n = 1;
  return g;
}

void check_engine_order(int n) {
  if (n < 1 || n > kEngineMaxOrder)
    throw std::invalid_argument("augmentation engine handles orders 1.." +
                                std::to_string(kEngineMaxOrder));
}

}  // namespace

Code2 code_of(const RawGraph& g) {
  return to_code2(canonical_labeling(g.n, g.adj.data()).code);
}

bool expand(int n_max, const ExpandHooks& hooks) {
  check_engine_order(n_max);
  Expander e(hooks, n_max, nullptr, true);
  RawGraph k1 = single_vertex();
  e.dfs(k1, code_of(k1));
  return !e.aborted;
}

std::vector<RawGraph> expand_prefix(int n_max, int split_depth,
                                    const ExpandHooks& hooks,
                                    bool visit_prefix) {
  check_engine_order(n_max);
  std::vector<RawGraph> roots;
  Expander e(hooks, split_depth, &roots, visit_prefix);
  RawGraph k1 = single_vertex();
  e.dfs(k1, code_of(k1));
  return roots;
}

bool expand_branch(const RawGraph& root, int n_max, const ExpandHooks& hooks) {
  check_engine_order(n_max);
  if (root.n >= n_max) return true;
  Expander e(hooks, n_max, nullptr, true);
  e.expand_children(root, code_of(root));
  return !e.aborted;
}

int default_split_depth(int n_max) {
  return std::max(1, std::min(7, n_max - 2));
}

}  // namespace cyclescope::detail
