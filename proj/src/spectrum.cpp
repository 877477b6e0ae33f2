#include "cyclescope/spectrum.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "cyclescope/canonical.hpp"
#include "cyclescope/graph6.hpp"

namespace cyclescope {

bool validate_cycle(const Graph& g, const CycleCertificate& c) {
  int len = c.length();
  if (len < 3) return false;
  VertexSet seen = 0;
  for (int v : c.vertices) {
    if (v < 0 || v >= g.order() || set_contains(seen, v)) return false;
    seen |= set_of(v);
  }
  for (int i = 0; i < len; ++i)
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % len])) return false;
  return true;
}

bool validate_path(const Graph& g, const PathCertificate& p) {
  if (p.vertices.size() < 2) return false;
  VertexSet seen = 0;
  for (int v : p.vertices) {
    if (v < 0 || v >= g.order() || set_contains(seen, v)) return false;
    seen |= set_of(v);
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.adjacent(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

namespace {

bool residues_satisfied(std::uint64_t mask, const std::vector<ResidueTarget>& ts) {
  for (const auto& t : ts) {
    bool hit = false;
    for (std::uint64_t m = mask; m && !hit; m &= m - 1)
      hit = std::countr_zero(m) % t.modulus == t.residue;
    if (!hit) return false;
  }
  return true;
}

struct CycleSearch {
  const Graph& g;
  const SpectrumOptions& opt;
  std::uint64_t wanted_lengths = 0;  // bits 3..n
  std::uint64_t found = 0;
  std::map<int, CycleCertificate> witnesses;
  bool halted = false;
  int path[Graph::kMaxVertices];
  VertexSet used = 0;
  int root = 0;

  CycleSearch(const Graph& graph, const SpectrumOptions& options)
      : g(graph), opt(options) {
    for (int len = 3; len <= g.order(); ++len)
      wanted_lengths |= std::uint64_t{1} << len;
  }

  bool stop_conditions_met() const {
    bool bounded = !opt.stop_when.empty() || opt.stop_predicate != nullptr;
    if (!bounded) return false;
    if (!opt.stop_when.empty() && !residues_satisfied(found, opt.stop_when))
      return false;
    if (opt.stop_predicate && !opt.stop_predicate(found)) return false;
    return true;
  }

  void record(int len) {
    if ((found >> len) & 1u) return;
    found |= std::uint64_t{1} << len;
    if (opt.record_witnesses)
      witnesses.emplace(len, CycleCertificate{{path, path + len}});
    if (found == wanted_lengths || stop_conditions_met()) halted = true;
  }

  void dfs(int v, int len) {
    if (len >= 3 && g.adjacent(v, root) && path[1] < v) {
      record(len);
      if (halted) return;
    }
    VertexSet cand = g.neighbors(v) & ~used;
    cand &= ~((set_of(root) << 1) - 1);  // only vertices above the root
    for (VertexSet m = cand; m && !halted; m &= m - 1) {
      int u = std::countr_zero(m);
      path[len] = u;
      used |= set_of(u);
      dfs(u, len + 1);
      used &= ~set_of(u);
    }
  }

  void run() {
    for (root = 0; root + 2 < g.order() && !halted; ++root) {
      path[0] = root;
      used = set_of(root);
      for (VertexSet m = g.neighbors(root) & ~((set_of(root) << 1) - 1);
           m && !halted; m &= m - 1) {
        int u = std::countr_zero(m);
        path[1] = u;
        used |= set_of(u);
        dfs(u, 2);
        used &= ~set_of(u);
      }
      used = 0;
    }
  }
};

}  // namespace

Spectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opt) {
  int n = g.order();
  bool bounded_search = !opt.stop_when.empty() || opt.stop_predicate != nullptr;
  if (n > kSpectrumOrderCap && !opt.override_cap && !bounded_search)
    throw std::invalid_argument(
        "full cycle-spectrum search capped at order " +
        std::to_string(kSpectrumOrderCap) + "; pass the override to lift it");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("order above vertex cap");

  CanonicalForm form;  // computed only when caching
  std::string cache_key;
  if (opt.cache) {
    form = canonical_form(g);
    cache_key = write_graph6(form.graph);
    if (auto hit = opt.cache->lookup(cache_key)) {
      bool usable = hit->exhaustive;
      if (!usable && !opt.stop_when.empty() && !opt.stop_predicate)
        usable = residues_satisfied(hit->length_mask, opt.stop_when);
      if (usable) {
        Spectrum s;
        s.exhaustive = hit->exhaustive;
        // Witnesses are stored in canonical labels; map back through the
        // inverse of position[].
        std::array<int, Graph::kMaxVertices> inv{};
        for (int v = 0; v < n; ++v) inv[form.position[v]] = v;
        for (std::uint64_t m = hit->length_mask; m; m &= m - 1)
          s.lengths.insert(std::countr_zero(m));
        if (opt.record_witnesses)
          for (const auto& [len, cert] : hit->canon_witnesses) {
            CycleCertificate local;
            for (int v : cert.vertices) local.vertices.push_back(inv[v]);
            s.witnesses.emplace(len, std::move(local));
          }
        return s;
      }
    }
  }

  CycleSearch search(g, opt);
  search.run();

  Spectrum s;
  s.exhaustive = !search.halted || search.found == search.wanted_lengths;
  for (std::uint64_t m = search.found; m; m &= m - 1)
    s.lengths.insert(std::countr_zero(m));
  s.witnesses = std::move(search.witnesses);

  if (opt.cache) {
    SpectrumCache::Entry entry;
    entry.length_mask = search.found;
    entry.exhaustive = s.exhaustive;
    for (const auto& [len, cert] : s.witnesses) {
      CycleCertificate canon;
      for (int v : cert.vertices) canon.vertices.push_back(form.position[v]);
      entry.canon_witnesses.emplace(len, std::move(canon));
    }
    opt.cache->store(cache_key, std::move(entry));
  }
  return s;
}

namespace {

struct PathSearch {
  const Graph& g;
  int y = 0;
  std::uint64_t found = 0;
  std::map<int, PathCertificate> witnesses = {};
  int path[Graph::kMaxVertices] = {};
  VertexSet used = 0;

  void dfs(int v, int len) {
    VertexSet cand = g.neighbors(v) & ~used;
    if (set_contains(cand, y)) {
      if (!((found >> len) & 1u)) {
        found |= std::uint64_t{1} << len;
        path[len] = y;
        witnesses.emplace(len, PathCertificate{{path, path + len + 1}});
      }
      cand &= ~set_of(y);
    }
    for (VertexSet m = cand; m; m &= m - 1) {
      int u = std::countr_zero(m);
      path[len] = u;
      used |= set_of(u);
      dfs(u, len + 1);
      used &= ~set_of(u);
    }
  }
};

}  // namespace

PathSpectrum path_spectrum(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("path_spectrum needs x != y");
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("path_spectrum endpoint out of range");
  PathSearch search{g, y};
  search.path[0] = x;
  search.used = set_of(x);
  search.dfs(x, 1);
  PathSpectrum ps;
  for (std::uint64_t m = search.found; m; m &= m - 1)
    ps.lengths.insert(std::countr_zero(m));
  ps.witnesses = std::move(search.witnesses);
  return ps;
}

std::optional<CycleCertificate> has_cycle_mod(const Graph& g, int ell, int k) {
  if (k < 1 || ell < 0 || ell >= k)
    throw std::invalid_argument("has_cycle_mod needs k >= 1 and 0 <= ell < k");
  SpectrumOptions opt;
  opt.stop_when = {{k, ell}};
  opt.override_cap = true;
  Spectrum s = cycle_spectrum(g, opt);
  for (const auto& [len, cert] : s.witnesses)
    if (len % k == ell) return cert;
  return std::nullopt;
}

std::vector<int> even_residues(int k) {
  std::vector<int> out;
  for (int r = 0; r < k; ++r)
    if (k % 2 == 0 ? r % 2 == 0 : true) out.push_back(r);
  return out;
}

ResidueCoverage residue_coverage(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("residue_coverage needs k >= 1");
  SpectrumOptions opt;
  opt.record_witnesses = false;
  Spectrum s = cycle_spectrum(g, opt);
  ResidueCoverage rc;
  rc.modulus = k;
  for (int len : s.lengths) rc.residues.insert(len % k);
  rc.all_covered = static_cast<int>(rc.residues.size()) == k;
  rc.all_even_covered = true;
  for (int r : even_residues(k))
    if (!rc.residues.count(r)) rc.all_even_covered = false;
  return rc;
}

int max_run(std::uint64_t mask, int d) {
  int count = 0;
  while (mask) {
    ++count;
    mask &= mask >> d;
  }
  return count;
}

int max_admissible_count(std::uint64_t mask) {
  return std::max(max_run(mask, 1), max_run(mask, 2));
}

namespace {

// Longest progression, preferring difference 1 and then smaller first term.
struct BestAp {
  int first = 0, difference = 0, count = 0;
};

BestAp best_ap(std::uint64_t mask, int min_first) {
  BestAp best;
  for (int d = 1; d <= 2; ++d)
    for (int L = min_first; L < 64; ++L) {
      if (!((mask >> L) & 1u)) continue;
      if (L - d >= min_first && ((mask >> (L - d)) & 1u)) continue;  // not a run start
      int cnt = 0;
      for (int x = L; x < 64 && ((mask >> x) & 1u); x += d) ++cnt;
      if (cnt > best.count) best = {L, d, cnt};
    }
  if (best.count == 1) best.difference = 1;
  return best;
}

}  // namespace

APFamily max_admissible_family(const Graph& g) {
  Spectrum s = cycle_spectrum(g);
  if (s.lengths.empty())
    throw std::invalid_argument("max_admissible_family needs a cyclic graph");
  BestAp ap = best_ap(s.length_mask(), 3);
  APFamily fam{ap.first, ap.difference, ap.count, {}};
  for (int i = 0; i < ap.count; ++i)
    fam.witnesses.push_back(s.witnesses.at(ap.first + i * ap.difference));
  return fam;
}

PathAPFamily max_admissible_path_family(const Graph& g, int x, int y) {
  PathSpectrum ps = path_spectrum(g, x, y);
  std::uint64_t mask = 0;
  for (int len : ps.lengths)
    if (len >= 2) mask |= std::uint64_t{1} << len;
  if (!mask)
    throw std::invalid_argument(
        "max_admissible_path_family needs an (x,y)-path of length >= 2");
  BestAp ap = best_ap(mask, 2);
  PathAPFamily fam{ap.first, ap.difference, ap.count, {}};
  for (int i = 0; i < ap.count; ++i)
    fam.witnesses.push_back(ps.witnesses.at(ap.first + i * ap.difference));
  return fam;
}

std::pair<int, DiagonalClass> classify_cycle_pair(const CycleCertificate& c,
                                                  int u, int v) {
  int len = c.length();
  int pu = -1, pv = -1;
  for (int i = 0; i < len; ++i) {
    if (c.vertices[i] == u) pu = i;
    if (c.vertices[i] == v) pv = i;
  }
  if (pu < 0 || pv < 0 || u == v)
    throw std::invalid_argument("classify_cycle_pair needs distinct on-cycle vertices");
  int d = std::abs(pu - pv);
  d = std::min(d, len - d);
  DiagonalClass cls = DiagonalClass::other;
  if (len % 2 == 0) {
    if (d == len / 2) cls = DiagonalClass::diagonal;
    else if (d == len / 2 - 1) cls = DiagonalClass::quasi_diagonal;
    else if (d == len / 2 - 2) cls = DiagonalClass::sub_quasi_diagonal;
  } else if (d == (len - 1) / 2) {
    cls = DiagonalClass::quasi_diagonal;
  }
  return {d, cls};
}

Graph qdi_graph(const CycleCertificate& c) {
  int len = c.length();
  if (len < 5)
    throw std::invalid_argument("qdi_graph needs a cycle of length >= 5");
  int qd = len % 2 == 0 ? len / 2 - 1 : (len - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < len; ++i) {
    int j = (i + qd) % len;
    if (i < j) edges.push_back({i, j});
  }
  return Graph::from_edges(len, edges);
}

std::optional<SpectrumCache::Entry> SpectrumCache::lookup(
    const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SpectrumCache::store(const std::string& key, Entry entry) {
  std::lock_guard<std::mutex> lock(mu_);
  map_[key] = std::move(entry);
}

std::size_t SpectrumCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

void SpectrumProbe::run(const SpectrumOptions& opt) {
  Spectrum s = cycle_spectrum(g_, opt);
  found_ |= s.length_mask();
  if (s.exhaustive) complete_ = true;
}

void SpectrumProbe::ensure_targets(const std::vector<ResidueTarget>& targets) {
  if (complete_ || residues_satisfied(found_, targets)) return;
  SpectrumOptions opt;
  opt.record_witnesses = false;
  opt.override_cap = true;
  opt.stop_when = targets;
  run(opt);
}

bool SpectrumProbe::has_cycle_mod(int k, int ell) {
  for (std::uint64_t m = found_; m; m &= m - 1)
    if (std::countr_zero(m) % k == ell) return true;
  if (complete_) return false;
  ensure_targets({{k, ell}});
  for (std::uint64_t m = found_; m; m &= m - 1)
    if (std::countr_zero(m) % k == ell) return true;
  return false;
}

bool SpectrumProbe::ensure_predicate(
    const std::function<bool(std::uint64_t)>& pred) {
  if (pred(found_)) return true;
  if (complete_) return false;
  SpectrumOptions opt;
  opt.record_witnesses = false;
  opt.override_cap = true;
  opt.stop_predicate = pred;
  run(opt);
  return pred(found_);
}

bool SpectrumProbe::has_admissible_family(int k) {
  if (max_admissible_count(found_) >= k) return true;
  if (complete_) return false;
  SpectrumOptions opt;
  opt.record_witnesses = false;
  opt.override_cap = true;
  opt.stop_predicate = [k](std::uint64_t mask) {
    return max_admissible_count(mask) >= k;
  };
  run(opt);
  return max_admissible_count(found_) >= k;
}

}  // namespace cyclescope
