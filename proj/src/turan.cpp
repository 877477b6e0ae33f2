#include "cyclescope/turan.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "augment.hpp"
#include "cyclescope/canonical.hpp"
#include "cyclescope/graph6.hpp"

namespace cyclescope {

namespace {

using detail::ExpandHooks;
using detail::RawGraph;
using detail::VisitAction;

long max_future_edges(int m, int n) {
  long s = 0;
  for (int j = m; j < n; ++j) s += j;
  return s;
}

// Does attaching the last vertex of `child` create a cycle of length
// ell (mod k)? Every new cycle runs new-vertex -> a -> ... -> b -> new-vertex
// with a,b among its neighbors, so it suffices to scan simple paths of the
// old graph between two such neighbors.
struct ForbiddenScan {
  const RawGraph& child;
  int ell, k;
  std::uint64_t attach;
  std::uint64_t used = 0;
  int start = 0;
  bool found = false;

  void dfs(int v, int len) {
    std::uint64_t cand = child.adj[v] & ~used;
    for (std::uint64_t m = cand; m && !found; m &= m - 1) {
      int u = std::countr_zero(m);
      if (u > start && ((attach >> u) & 1u) && (len + 3) % k == ell) {
        found = true;
        return;
      }
      used |= std::uint64_t{1} << u;
      dfs(u, len + 1);
      used &= ~(std::uint64_t{1} << u);
    }
  }

  bool run() {
    int added = child.n - 1;
    for (std::uint64_t m = attach; m && !found; m &= m - 1) {
      start = std::countr_zero(m);
      used = (std::uint64_t{1} << added) | (std::uint64_t{1} << start);
      dfs(start, 0);
    }
    return found;
  }
};

bool adds_forbidden_cycle(const RawGraph& child, int ell, int k) {
  ForbiddenScan scan{child, ell, k, child.adj[child.n - 1]};
  return scan.run();
}

std::string canonical_graph6(const RawGraph& g) {
  return write_graph6(canonical_form(g.to_graph()).graph);
}

}  // namespace

TuranResult max_edges_without(int n, int ell, int k, const TuranOptions& opt) {
  if (k < 1 || ell < 0 || ell >= k)
    throw std::invalid_argument("max_edges_without needs k >= 1 and 0 <= ell < k");
  if (n < 1) throw std::invalid_argument("max_edges_without needs n >= 1");
  if (n > kTuranOrderCap && !opt.override_cap)
    throw std::invalid_argument("turan search capped at order " +
                                std::to_string(kTuranOrderCap) +
                                "; pass the override to lift it");

  TuranResult res;
  res.n = n;
  res.ell = ell;
  res.k = k;
  if (n == 1) {
    res.lower_bound_witness = "@";
    if (opt.all_extremal) res.extremal = {"@"};
    res.search_nodes = 1;
    return res;
  }

  // Value pass, serial: branch and bound over forbidden-cycle-free classes.
  int best = -1;
  std::string witness;
  long nodes = 0;
  ExpandHooks pass1;
  pass1.dense_first = true;
  pass1.visit = [&](const RawGraph& g) {
    ++nodes;
    if (g.n == n) {
      if (g.edges > best) {
        best = g.edges;
        witness = canonical_graph6(g);
      }
      return VisitAction::skip_subtree;
    }
    return VisitAction::descend;
  };
  pass1.prune_child = [&](const RawGraph& c) {
    if (c.edges + max_future_edges(c.n, n) <= best) return true;
    return adds_forbidden_cycle(c, ell, k);
  };
  detail::expand(n, pass1);
  res.max_edges = best;
  res.lower_bound_witness = witness;
  res.search_nodes = nodes;
  if (!opt.all_extremal) return res;

  // Completeness pass against the settled optimum: keep everything that can
  // still tie it, collect all extremal classes.
  std::atomic<long> nodes2{0};
  std::mutex out_mu;
  std::vector<std::string> extremal;
  auto make_hooks = [&](std::vector<std::string>* sink, long* local_nodes) {
    ExpandHooks h;
    h.dense_first = true;
    h.visit = [&, sink, local_nodes](const RawGraph& g) {
      ++*local_nodes;
      if (g.n == n) {
        if (g.edges == best) sink->push_back(canonical_graph6(g));
        return VisitAction::skip_subtree;
      }
      return VisitAction::descend;
    };
    h.prune_child = [&](const RawGraph& c) {
      if (c.edges + max_future_edges(c.n, n) < best) return true;
      return adds_forbidden_cycle(c, ell, k);
    };
    return h;
  };

  long prefix_nodes = 0;
  ExpandHooks prefix_hooks = make_hooks(&extremal, &prefix_nodes);
  int split = detail::default_split_depth(n);
  auto roots = detail::expand_prefix(n, split, prefix_hooks, true);
  nodes2 += prefix_nodes;

  int jobs = std::max(1, opt.jobs);
  std::vector<std::vector<std::string>> branch_out(roots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    long local_nodes = 0;
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= roots.size()) break;
      ExpandHooks h = make_hooks(&branch_out[i], &local_nodes);
      detail::expand_branch(roots[i], n, h);
    }
    nodes2 += local_nodes;
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& b : branch_out)
    extremal.insert(extremal.end(), b.begin(), b.end());
  std::sort(extremal.begin(), extremal.end());
  res.extremal = std::move(extremal);
  res.search_nodes = nodes2.load();
  if (!res.extremal.empty()) res.lower_bound_witness = res.extremal.front();
  return res;
}

std::optional<long> turan_closed_form(int n, int ell, int k,
                                      std::string* regime_note) {
  auto note = [&](const std::string& s) {
    if (regime_note) *regime_note = s;
  };
  if (k == 2 && ell == 0) return 3L * (n - 1) / 2;
  if (k == 3 && ell == 0) {
    if (n >= 3) return 2L * (n - 2);
    note("below formula range n >= 3");
    return std::nullopt;
  }
  if (k == 4 && ell == 0) return 19L * (n - 1) / 12;
  if (k % 2 == 1 && k >= 3 && ell == 0) {
    if (n >= 2 * k - 3) return static_cast<long>(k - 1) * (n - k + 1);
    note("n < 2k-3 regime: equals ex(n, C_k)");
    return std::nullopt;
  }
  if (k % 2 == 1 && k >= 3 && ell == 2) {
    if (n >= 2 * k) return static_cast<long>(k) * (n - k);
    note("n < 2k regime: equals ex(n, C_{k+2})");
    return std::nullopt;
  }
  return std::nullopt;
}

TuranTable turan_table(int k, int ell, int n_from, int n_to,
                       const TuranOptions& opt) {
  if (n_from < 1 || n_from > n_to)
    throw std::invalid_argument("turan_table needs 1 <= n_from <= n_to");
  TuranTable table;
  table.ell = ell;
  table.k = k;
  for (int n = n_from; n <= n_to; ++n) {
    TuranTableRow row;
    row.n = n;
    row.max_edges = max_edges_without(n, ell, k, opt).max_edges;
    row.formula = turan_closed_form(n, ell, k, &row.regime);
    row.match = !row.formula || *row.formula == row.max_edges;
    if (!row.match) table.all_match = false;
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cyclescope
