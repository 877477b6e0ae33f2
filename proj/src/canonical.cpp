#include "cyclescope/canonical.hpp"

#include <algorithm>
#include <vector>

#include "cyclescope/graph6.hpp"

namespace cyclescope {
namespace detail {

namespace {

constexpr int kMaxStoredAutos = 192;

struct UnionFind {
  std::array<std::uint8_t, Graph::kMaxVertices> parent;
  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = static_cast<std::uint8_t>(find(b)); }
};

struct Canonicalizer {
  int n;
  const std::uint64_t* adj;
  CanonWords best_code;
  std::array<std::uint8_t, Graph::kMaxVertices> best_lab{};
  bool have_best = false;
  std::vector<std::array<std::uint8_t, Graph::kMaxVertices>> autos;
  std::array<std::uint8_t, Graph::kMaxVertices> ind_path{};

  CanonWords leaf_code(const std::uint8_t* lab) const {
    CanonWords c;
    c.n = n;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      std::uint64_t row = adj[lab[j]];
      for (int i = 0; i < j; ++i, ++bit)
        if ((row >> lab[i]) & 1u) c.w[bit >> 6] |= 1ull << (63 - (bit & 63));
    }
    return c;
  }

  // Equitable refinement: repeat full splitter passes until no cell splits.
  void refine(std::uint8_t* lab, std::uint8_t* ptn) const {
    bool changed = true;
    while (changed) {
      changed = false;
      int cs = 0;
      while (cs < n) {
        int ce = cs;
        while (ptn[ce]) ++ce;
        std::uint64_t splitter = 0;
        for (int i = cs; i <= ce; ++i) splitter |= VertexSet{1} << lab[i];

        int ds = 0;
        while (ds < n) {
          int de = ds;
          while (ptn[de]) ++de;
          if (de > ds) {
            int cnt[Graph::kMaxVertices];
            bool differ = false;
            for (int i = ds; i <= de; ++i) {
              cnt[i] = std::popcount(adj[lab[i]] & splitter);
              if (cnt[i] != cnt[ds]) differ = true;
            }
            if (differ) {
              for (int i = ds + 1; i <= de; ++i) {  // stable insertion sort
                int key = cnt[i];
                std::uint8_t v = lab[i];
                int j = i - 1;
                while (j >= ds && cnt[j] > key) {
                  cnt[j + 1] = cnt[j];
                  lab[j + 1] = lab[j];
                  --j;
                }
                cnt[j + 1] = key;
                lab[j + 1] = v;
              }
              for (int i = ds; i < de; ++i)
                if (cnt[i] != cnt[i + 1]) ptn[i] = 0;
              changed = true;
            }
          }
          ds = de + 1;
        }
        cs = ce + 1;
      }
    }
  }

  void process_leaf(const std::uint8_t* lab) {
    CanonWords code = leaf_code(lab);
    if (!have_best || code > best_code) {
      best_code = code;
      std::copy(lab, lab + n, best_lab.begin());
      have_best = true;
    } else if (code == best_code &&
               static_cast<int>(autos.size()) < kMaxStoredAutos) {
      // Equal codes under two labelings yield an automorphism.
      std::array<std::uint8_t, Graph::kMaxVertices> gamma{};
      for (int i = 0; i < n; ++i) gamma[best_lab[i]] = lab[i];
      autos.push_back(gamma);
    }
  }

  void search(std::uint8_t* lab, std::uint8_t* ptn, int depth) {
    refine(lab, ptn);
    int t = -1, te = -1;
    for (int i = 0; i < n;) {
      int e = i;
      while (ptn[e]) ++e;
      if (e > i) {
        t = i;
        te = e;
        break;
      }
      i = e + 1;
    }
    if (t < 0) {
      process_leaf(lab);
      return;
    }

    std::array<std::uint8_t, Graph::kMaxVertices> cands{};
    int ncand = te - t + 1;
    for (int i = 0; i < ncand; ++i) cands[i] = lab[t + i];
    std::sort(cands.begin(), cands.begin() + ncand);

    UnionFind uf;
    std::size_t orbits_built_from = static_cast<std::size_t>(-1);
    std::array<std::uint8_t, Graph::kMaxVertices> tried{};
    int ntried = 0;
    std::array<std::uint8_t, Graph::kMaxVertices> child_lab{};
    std::array<std::uint8_t, Graph::kMaxVertices> child_ptn{};

    for (int ci = 0; ci < ncand; ++ci) {
      int v = cands[ci];
      if (ntried > 0) {
        if (orbits_built_from != autos.size()) {
          uf.reset(n);
          for (const auto& gamma : autos) {
            bool fixes_path = true;
            for (int d = 0; d < depth && fixes_path; ++d)
              fixes_path = gamma[ind_path[d]] == ind_path[d];
            if (!fixes_path) continue;
            for (int x = 0; x < n; ++x) uf.unite(x, gamma[x]);
          }
          orbits_built_from = autos.size();
        }
        bool skip = false;
        for (int i = 0; i < ntried && !skip; ++i)
          skip = uf.find(tried[i]) == uf.find(v);
        if (skip) continue;
      }

      // Individualize v at the head of the target cell.
      std::copy(lab, lab + n, child_lab.begin());
      std::copy(ptn, ptn + n, child_ptn.begin());
      int vpos = t;
      while (child_lab[vpos] != v) ++vpos;
      std::rotate(child_lab.begin() + t, child_lab.begin() + vpos,
                  child_lab.begin() + vpos + 1);
      child_ptn[t] = 0;
      ind_path[depth] = static_cast<std::uint8_t>(v);
      search(child_lab.data(), child_ptn.data(), depth + 1);
      tried[ntried++] = static_cast<std::uint8_t>(v);
    }
  }
};

}  // namespace

CanonLabeling canonical_labeling(int n, const std::uint64_t* adj) {
  CanonLabeling out;
  if (n == 0) {
    out.code.n = 0;
    return out;
  }
  Canonicalizer c;
  c.n = n;
  c.adj = adj;
  std::array<std::uint8_t, Graph::kMaxVertices> lab{};
  std::array<std::uint8_t, Graph::kMaxVertices> ptn{};
  for (int i = 0; i < n; ++i) {
    lab[i] = static_cast<std::uint8_t>(i);
    ptn[i] = 1;
  }
  ptn[n - 1] = 0;
  c.search(lab.data(), ptn.data(), 0);
  out.code = c.best_code;
  out.lab = c.best_lab;
  return out;
}

}  // namespace detail

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
  detail::CanonLabeling cl = detail::canonical_labeling(n, rows.data());

  CanonicalForm form;
  for (int i = 0; i < n; ++i) form.position[cl.lab[i]] = static_cast<std::uint8_t>(i);
  std::vector<std::uint64_t> canon_rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (VertexSet m = g.neighbors(cl.lab[i]); m; m &= m - 1)
      canon_rows[i] |= VertexSet{1} << form.position[std::countr_zero(m)];
  form.graph = Graph::from_neighbor_masks(n, canon_rows);
  return form;
}

CanonicalCode canonical_code(const Graph& g) {
  return CanonicalCode{write_graph6(canonical_form(g).graph)};
}

bool marked_isomorphic(const Graph& g, int gx, int gy, const Graph& h, int hx,
                       int hy) {
  int n = g.order();
  if (n != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.degree(gx) != h.degree(hx) || g.degree(gy) != h.degree(hy)) return false;
  if (g.adjacent(gx, gy) != h.adjacent(hx, hy)) return false;

  std::vector<int> g_rest, h_rest;
  for (int v = 0; v < n; ++v) {
    if (v != gx && v != gy) g_rest.push_back(v);
    if (v != hx && v != hy) h_rest.push_back(v);
  }
  std::vector<int> map(n, -1);
  map[gx] = hx;
  map[gy] = hy;
  std::sort(h_rest.begin(), h_rest.end());
  do {
    for (std::size_t i = 0; i < g_rest.size(); ++i) map[g_rest[i]] = h_rest[i];
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        ok = g.adjacent(u, v) == h.adjacent(map[u], map[v]);
    if (ok) return true;
  } while (std::next_permutation(h_rest.begin(), h_rest.end()));
  return false;
}

}  // namespace cyclescope
