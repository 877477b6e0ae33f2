#include "cyclescope/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "augment.hpp"
#include "cyclescope/canonical.hpp"
#include "cyclescope/constructions.hpp"
#include "cyclescope/graph6.hpp"
#include "cyclescope/report.hpp"

namespace cyclescope {

namespace {

// ---------------------------------------------------------------------------
// Exception families

ExceptionFamily complete_exception(int order) {
  std::string name = "K_" + std::to_string(order);
  return {name, [order, name](int n) -> std::optional<std::pair<Graph, std::string>> {
            if (n != order) return std::nullopt;
            return std::make_pair(complete(order), name);
          }};
}

ExceptionFamily complete_bipartite_exception(int s) {
  std::string label = "K_{" + std::to_string(s) + ",n-" + std::to_string(s) + "}";
  return {label, [s](int n) -> std::optional<std::pair<Graph, std::string>> {
            if (n - s < 1) return std::nullopt;
            std::string name = "K_{" + std::to_string(s) + "," +
                               std::to_string(n - s) + "}";
            return std::make_pair(complete_bipartite(s, n - s), name);
          }};
}

ExceptionFamily petersen_exception() {
  return {"Petersen", [](int n) -> std::optional<std::pair<Graph, std::string>> {
            if (n != 10) return std::nullopt;
            return std::make_pair(petersen(), std::string("Petersen"));
          }};
}

// ---------------------------------------------------------------------------
// Shared conclusion helpers

std::function<bool(const Graph&, SpectrumProbe&)> residues_conclusion(
    int k, std::vector<int> residues) {
  return [k, residues = std::move(residues)](const Graph&, SpectrumProbe& probe) {
    for (int r : residues)
      if (!probe.has_cycle_mod(k, r)) return false;
    return true;
  };
}

std::vector<ResidueTarget> residue_target_list(int k, const std::vector<int>& rs) {
  std::vector<ResidueTarget> out;
  for (int r : rs) out.push_back({k, r});
  return out;
}

std::vector<int> all_residues(int k) {
  std::vector<int> out(k);
  for (int r = 0; r < k; ++r) out[r] = r;
  return out;
}

int count_degrees_below(const Graph& g, int bound) {
  int c = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < bound) ++c;
  return c;
}

std::uint64_t consecutive_mask(int from, int to) {
  std::uint64_t m = 0;
  for (int len = from; len <= to && len < 64; ++len) m |= std::uint64_t{1} << len;
  return m;
}

std::uint64_t path_length_mask(const Graph& g, int x, int y, int min_len) {
  PathSpectrum ps = path_spectrum(g, x, y);
  std::uint64_t mask = 0;
  for (int len : ps.lengths)
    if (len >= min_len) mask |= std::uint64_t{1} << len;
  return mask;
}

bool augmented_two_connected(const Graph& g, int x, int y) {
  Graph gxy = g.adjacent(x, y) ? g : g.with_edge(x, y);
  return is_k_connected(gxy, 2);
}

long take_param(std::map<std::string, long>& params, const std::string& key,
                long fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  long v = it->second;
  params.erase(it);
  return v;
}

void finish_params(const std::string& id, const std::map<std::string, long>& left) {
  if (!left.empty())
    throw std::invalid_argument("theorem " + id + " does not take parameter '" +
                                left.begin()->first + "'");
}

// ---------------------------------------------------------------------------
// Spec builders

TheoremSpec spec_adm_cycles(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "adm-cycles-min-deg-k";
  long k = take_param(params, "k", 4);
  finish_params(s.id, params);
  if (k < 4) throw std::invalid_argument(s.id + " needs k >= 4");
  s.title = "2-connected, min degree >= k: k admissible cycles";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k);
  s.hypothesis.connectivity_at_least = 2;
  s.conclusion = [k](const Graph&, SpectrumProbe& probe) {
    return probe.has_admissible_family(static_cast<int>(k));
  };
  s.exceptions = {complete_exception(static_cast<int>(k) + 1),
                  complete_bipartite_exception(static_cast<int>(k))};
  return s;
}

TheoremSpec spec_adm_cycles_k3_search(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "adm-cycles-k3-search";
  finish_params(s.id, params);
  s.title = "open search: 2-connected, min degree >= 3, 3 admissible cycles";
  s.default_n_max = 9;
  s.informational = true;
  s.hypothesis.min_degree = 3;
  s.hypothesis.connectivity_at_least = 2;
  s.conclusion = [](const Graph&, SpectrumProbe& probe) {
    return probe.has_admissible_family(3);
  };
  s.exceptions = {complete_exception(4), complete_bipartite_exception(3),
                  petersen_exception()};
  return s;
}

TheoremSpec spec_even_ell(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "even-ell-min-deg-k";
  long k = take_param(params, "k", 4);
  finish_params(s.id, params);
  if (k < 4) throw std::invalid_argument(s.id + " needs k >= 4");
  s.title = "2-connected, min degree >= k: cycles in every even class mod k";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k);
  s.hypothesis.connectivity_at_least = 2;
  auto residues = even_residues(static_cast<int>(k));
  s.residue_targets = residue_target_list(static_cast<int>(k), residues);
  s.conclusion = residues_conclusion(static_cast<int>(k), residues);
  s.exceptions = {complete_exception(static_cast<int>(k) + 1),
                  complete_bipartite_exception(static_cast<int>(k))};
  return s;
}

TheoremSpec spec_even_ell_not_2(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "even-ell-not-2-corollary";
  long k = take_param(params, "k", 4);
  finish_params(s.id, params);
  if (k < 4) throw std::invalid_argument(s.id + " needs k >= 4");
  s.title = "2-connected, min degree >= k: even classes mod k except 2";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k);
  s.hypothesis.connectivity_at_least = 2;
  std::vector<int> residues;
  for (int r : even_residues(static_cast<int>(k)))
    if (r != 2) residues.push_back(r);
  s.residue_targets = residue_target_list(static_cast<int>(k), residues);
  s.conclusion = residues_conclusion(static_cast<int>(k), residues);
  return s;
}

TheoremSpec spec_even_ell_min_deg_k_1(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "even-ell-min-deg-k-1";
  long k = take_param(params, "k", 4);
  finish_params(s.id, params);
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument(s.id + " needs even k >= 4");
  s.title =
      "2-connected, min degree >= k-1, order >= k+2 (k even): even classes mod k";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k) - 1;
  s.hypothesis.connectivity_at_least = 2;
  s.hypothesis.min_order = static_cast<int>(k) + 2;
  auto residues = even_residues(static_cast<int>(k));
  s.residue_targets = residue_target_list(static_cast<int>(k), residues);
  s.conclusion = residues_conclusion(static_cast<int>(k), residues);
  return s;
}

TheoremSpec spec_all_ell_non_bipartite(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "all-ell-non-bipartite";
  long k = take_param(params, "k", 3);
  finish_params(s.id, params);
  if (k < 3) throw std::invalid_argument(s.id + " needs k >= 3");
  s.title = "2-connected non-bipartite, min degree >= k: every class mod k";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k);
  s.hypothesis.connectivity_at_least = 2;
  s.hypothesis.bipartite = Tri::forbid;
  auto residues = all_residues(static_cast<int>(k));
  s.residue_targets = residue_target_list(static_cast<int>(k), residues);
  s.conclusion = residues_conclusion(static_cast<int>(k), residues);
  s.exceptions = {complete_exception(static_cast<int>(k) + 1)};
  if (k == 3) s.exceptions.push_back(petersen_exception());
  return s;
}

TheoremSpec spec_turan_0_mod_k(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "turan-0-mod-k";
  long k = take_param(params, "k", 3);
  finish_params(s.id, params);
  if (k < 3) throw std::invalid_argument(s.id + " needs k >= 3");
  s.title = "edge count above the extremal bound forces a 0 mod k cycle";
  s.params = {{"k", k}};
  s.default_n_max = 8;
  s.extra_hypothesis = [k](const Graph& g) {
    long n = g.order(), e = g.edge_count();
    if (k == 3) return n >= 3 && e > 2 * (n - 2);
    if (k == 4) return e > 19 * (n - 1) / 12;
    return n >= 2 * k - 3 && e > (k - 1) * (n - k + 1);
  };
  s.residue_targets = {{static_cast<int>(k), 0}};
  s.conclusion = residues_conclusion(static_cast<int>(k), {0});
  return s;
}

TheoremSpec spec_mod3_residue(int residue) {
  TheoremSpec s;
  s.id = "mod3-residue-" + std::to_string(residue);
  s.title = "2-connected, min degree >= 3: a cycle of length " +
            std::to_string(residue) + " mod 3";
  s.default_n_max = 8;
  s.hypothesis.min_degree = 3;
  s.hypothesis.connectivity_at_least = 2;
  s.residue_targets = {{3, residue}};
  s.conclusion = residues_conclusion(3, {residue});
  if (residue == 1) s.exceptions = {petersen_exception()};
  if (residue == 2)
    s.exceptions = {complete_exception(4), complete_bipartite_exception(3)};
  return s;
}

TheoremSpec spec_zero_mod_3_degree(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "zero-mod-3-degree";
  finish_params(s.id, params);
  s.title = "at most one vertex of degree < 3: a cycle of length 0 mod 3";
  s.default_n_max = 8;
  s.extra_hypothesis = [](const Graph& g) {
    return count_degrees_below(g, 3) <= 1;
  };
  s.residue_targets = {{3, 0}};
  s.conclusion = residues_conclusion(3, {0});
  return s;
}

TheoremSpec spec_connectivity(bool even_ell_variant,
                              std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = even_ell_variant ? "connectivity-even-ell" : "connectivity-adm-cycles";
  long k = take_param(params, "k", 4);
  long r = take_param(params, "r", 0);
  finish_params(s.id, params);
  if (k < 2 || r < 0 || r > k - 2)
    throw std::invalid_argument(s.id + " needs k >= 2 and 0 <= r <= k-2");
  s.title = even_ell_variant
                ? "low connectivity with min degree k-r forces even classes mod k"
                : "low connectivity with min degree k-r forces k admissible cycles";
  s.params = {{"k", k}, {"r", r}};
  s.default_n_max = 8;
  s.hypothesis.min_degree = static_cast<int>(k - r);
  s.hypothesis.connectivity_at_least = 2;
  // Integer connectivity below (k+2)/2 - r means below its ceiling.
  long threshold = (k + 3 - 2 * r) / 2;
  s.extra_hypothesis = [threshold](const Graph& g) {
    return vertex_connectivity(g) < threshold;
  };
  if (even_ell_variant) {
    auto residues = even_residues(static_cast<int>(k));
    s.residue_targets = residue_target_list(static_cast<int>(k), residues);
    s.conclusion = residues_conclusion(static_cast<int>(k), residues);
  } else {
    s.conclusion = [k](const Graph&, SpectrumProbe& probe) {
      return probe.has_admissible_family(static_cast<int>(k));
    };
  }
  return s;
}

TheoremSpec spec_two_consecutive_even(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "two-consecutive-even";
  finish_params(s.id, params);
  s.title = "3-connected, order >= 6: two cycles of consecutive even lengths";
  s.default_n_max = 8;
  s.hypothesis.connectivity_at_least = 3;
  s.hypothesis.min_order = 6;
  s.conclusion = [](const Graph&, SpectrumProbe& probe) {
    constexpr std::uint64_t evens = 0x5555555555555555ull;
    return probe.ensure_predicate([](std::uint64_t mask) {
      std::uint64_t e = mask & evens;
      return (e & (e >> 2)) != 0;
    });
  };
  return s;
}

TheoremSpec spec_zero_mod_4_min_deg_2(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "zero-mod-4-min-deg-2";
  finish_params(s.id, params);
  s.title = "min degree >= 2, at most two vertices of degree 2: a 0 mod 4 cycle";
  s.default_n_max = 8;
  s.hypothesis.min_degree = 2;
  s.extra_hypothesis = [](const Graph& g) {
    int twos = 0;
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == 2) ++twos;
    return twos <= 2;
  };
  s.residue_targets = {{4, 0}};
  s.conclusion = residues_conclusion(4, {0});
  return s;
}

TheoremSpec spec_two_mod_4(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "two-mod-4";
  finish_params(s.id, params);
  s.title = "2-connected, min degree >= 3, order >= 6: a 2 mod 4 cycle";
  s.default_n_max = 8;
  s.hypothesis.min_degree = 3;
  s.hypothesis.connectivity_at_least = 2;
  s.hypothesis.min_order = 6;
  s.residue_targets = {{4, 2}};
  s.conclusion = residues_conclusion(4, {2});
  return s;
}

TheoremSpec spec_consecutive_odd(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "consecutive-odd-1-3-mod-4";
  finish_params(s.id, params);
  s.title = "3-connected non-bipartite: cycles of lengths 1 and 3 mod 4";
  s.default_n_max = 8;
  s.hypothesis.connectivity_at_least = 3;
  s.hypothesis.bipartite = Tri::forbid;
  s.residue_targets = {{4, 1}, {4, 3}};
  s.conclusion = residues_conclusion(4, {1, 3});
  s.exceptions = {complete_exception(4), petersen_exception()};
  return s;
}

TheoremSpec spec_woodall(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "woodall";
  finish_params(s.id, params);
  s.title = "more than n^2/4 edges: cycles of every length from 3 to (n+3)/2";
  s.default_n_max = 8;
  s.extra_hypothesis = [](const Graph& g) {
    long n = g.order();
    return g.edge_count() > n * n / 4;
  };
  s.conclusion = [](const Graph& g, SpectrumProbe& probe) {
    std::uint64_t need = consecutive_mask(3, (g.order() + 3) / 2);
    return probe.ensure_predicate(
        [need](std::uint64_t mask) { return (mask & need) == need; });
  };
  return s;
}

TheoremSpec spec_bondy_pancyclic(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "bondy-pancyclic";
  finish_params(s.id, params);
  s.title = "min degree above n/2: pancyclic";
  s.default_n_max = 8;
  s.extra_hypothesis = [](const Graph& g) {
    return g.order() >= 3 && 2 * min_degree(g) > g.order();
  };
  s.conclusion = [](const Graph& g, SpectrumProbe& probe) {
    std::uint64_t need = consecutive_mask(3, g.order());
    return probe.ensure_predicate(
        [need](std::uint64_t mask) { return (mask & need) == need; });
  };
  return s;
}

TheoremSpec spec_bondy_vince(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "bondy-vince";
  finish_params(s.id, params);
  s.title = "connected, at most two vertices of degree < 3: two admissible cycles";
  s.default_n_max = 8;
  s.hypothesis.connectivity_at_least = 1;
  s.extra_hypothesis = [](const Graph& g) {
    return count_degrees_below(g, 3) <= 2;
  };
  s.conclusion = [](const Graph&, SpectrumProbe& probe) {
    return probe.has_admissible_family(2);
  };
  return s;
}

TheoremSpec spec_adm_paths(bool with_z, std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = with_z ? "adm-paths-z" : "adm-paths";
  long k = take_param(params, "k", 2);
  finish_params(s.id, params);
  if (k < 1) throw std::invalid_argument(s.id + " needs k >= 1");
  s.title = with_z ? "degree >= k+1 off {x,y,z}, g+xy 2-connected: k admissible "
                     "(x,y)-paths"
                   : "degree >= k+1 off {x,y}, g+xy 2-connected: k admissible "
                     "(x,y)-paths";
  s.params = {{"k", k}};
  s.default_n_max = 6;
  s.hypothesis.connectivity_at_least = 1;
  if (with_z) s.hypothesis.min_order = 4;
  s.quantifier = with_z ? TheoremSpec::Quantifier::vertex_pair_with_z
                        : TheoremSpec::Quantifier::vertex_pair;
  s.tuple_hypothesis = [k, with_z](const Graph& g, int x, int y, int z) {
    for (int v = 0; v < g.order(); ++v) {
      if (v == x || v == y || (with_z && v == z)) continue;
      if (g.degree(v) < k + 1) return false;
    }
    return augmented_two_connected(g, x, y);
  };
  s.tuple_conclusion = [k](const Graph& g, int x, int y, int) {
    return max_admissible_count(path_length_mask(g, x, y, 2)) >= k;
  };
  // Secondary tally: the same family question when length-1 paths count.
  s.tuple_aux = [k](const Graph& g, int x, int y, int) {
    return max_admissible_count(path_length_mask(g, x, y, 1)) >= k;
  };
  s.aux_label = "holds_allowing_unit_paths";
  return s;
}

bool trichotomy_outcome_valid(const Graph& g, int x, int y,
                              const TrichotomyOutcome& out) {
  switch (out.kind) {
    case TrichotomyOutcome::Kind::cycle_2_mod_4:
      return validate_cycle(g, out.cycle) && out.cycle.length() % 4 == 2;
    case TrichotomyOutcome::Kind::path_pair: {
      if (!validate_path(g, out.path_a) || !validate_path(g, out.path_b))
        return false;
      if (out.path_a.vertices.front() != x || out.path_a.vertices.back() != y)
        return false;
      if (out.path_b.vertices.front() != x || out.path_b.vertices.back() != y)
        return false;
      int diff = out.path_b.length() - out.path_a.length();
      return ((diff % 4) + 4) % 4 == 2;
    }
    case TrichotomyOutcome::Kind::construction:
      return out.construction_index >= 1 && out.construction_index <= 4;
  }
  return false;
}

TheoremSpec spec_trichotomy(std::map<std::string, long> params) {
  TheoremSpec s;
  s.id = "trichotomy-2-mod-4";
  finish_params(s.id, params);
  s.title =
      "degree >= 3 off {x,y}, g+xy 2-connected: a 2 mod 4 cycle, a 2 mod 4 "
      "path pair, or one of the four gadgets";
  s.default_n_max = 7;
  s.hypothesis.connectivity_at_least = 1;
  s.quantifier = TheoremSpec::Quantifier::vertex_pair;
  s.tuple_hypothesis = [](const Graph& g, int x, int y, int) {
    for (int v = 0; v < g.order(); ++v)
      if (v != x && v != y && g.degree(v) < 3) return false;
    return augmented_two_connected(g, x, y);
  };
  s.tuple_conclusion = [](const Graph& g, int x, int y, int) {
    auto out = trichotomy_check(g, x, y);
    return out && trichotomy_outcome_valid(g, x, y, *out);
  };
  return s;
}

// ---------------------------------------------------------------------------
// Registry

TheoremSpec build_spec(const std::string& id, std::map<std::string, long> params) {
  if (id == "adm-cycles-min-deg-k") return spec_adm_cycles(std::move(params));
  if (id == "adm-cycles-k3-search")
    return spec_adm_cycles_k3_search(std::move(params));
  if (id == "even-ell-min-deg-k") return spec_even_ell(std::move(params));
  if (id == "even-ell-not-2-corollary")
    return spec_even_ell_not_2(std::move(params));
  if (id == "even-ell-min-deg-k-1")
    return spec_even_ell_min_deg_k_1(std::move(params));
  if (id == "all-ell-non-bipartite")
    return spec_all_ell_non_bipartite(std::move(params));
  if (id == "turan-0-mod-k") return spec_turan_0_mod_k(std::move(params));
  if (id == "mod3-residue-0") return spec_mod3_residue(0);
  if (id == "mod3-residue-1") return spec_mod3_residue(1);
  if (id == "mod3-residue-2") return spec_mod3_residue(2);
  if (id == "zero-mod-3-degree") return spec_zero_mod_3_degree(std::move(params));
  if (id == "connectivity-adm-cycles")
    return spec_connectivity(false, std::move(params));
  if (id == "connectivity-even-ell")
    return spec_connectivity(true, std::move(params));
  if (id == "two-consecutive-even")
    return spec_two_consecutive_even(std::move(params));
  if (id == "zero-mod-4-min-deg-2")
    return spec_zero_mod_4_min_deg_2(std::move(params));
  if (id == "two-mod-4") return spec_two_mod_4(std::move(params));
  if (id == "consecutive-odd-1-3-mod-4")
    return spec_consecutive_odd(std::move(params));
  if (id == "woodall") return spec_woodall(std::move(params));
  if (id == "bondy-pancyclic") return spec_bondy_pancyclic(std::move(params));
  if (id == "bondy-vince") return spec_bondy_vince(std::move(params));
  if (id == "adm-paths") return spec_adm_paths(false, std::move(params));
  if (id == "adm-paths-z") return spec_adm_paths(true, std::move(params));
  if (id == "trichotomy-2-mod-4") return spec_trichotomy(std::move(params));
  throw std::out_of_range("unknown theorem id: " + id);
}

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids = {
      "adm-cycles-min-deg-k",
      "even-ell-min-deg-k",
      "even-ell-not-2-corollary",
      "even-ell-min-deg-k-1",
      "all-ell-non-bipartite",
      "turan-0-mod-k",
      "mod3-residue-0",
      "mod3-residue-1",
      "mod3-residue-2",
      "zero-mod-3-degree",
      "connectivity-adm-cycles",
      "connectivity-even-ell",
      "two-consecutive-even",
      "zero-mod-4-min-deg-2",
      "two-mod-4",
      "consecutive-odd-1-3-mod-4",
      "woodall",
      "bondy-pancyclic",
      "bondy-vince",
      "adm-paths",
      "adm-paths-z",
      "trichotomy-2-mod-4",
      "adm-cycles-k3-search",
  };
  return ids;
}

}  // namespace

const std::vector<TheoremSpec>& registered_specs() {
  static const std::vector<TheoremSpec> specs = [] {
    std::vector<TheoremSpec> out;
    for (const auto& id : registry_ids()) out.push_back(build_spec(id, {}));
    return out;
  }();
  return specs;
}

std::optional<TheoremSpec> find_spec(const std::string& id,
                                     const std::map<std::string, long>& overrides) {
  try {
    return build_spec(id, overrides);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Trichotomy check

std::optional<TrichotomyOutcome> trichotomy_check(const Graph& g, int x, int y) {
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw std::invalid_argument("trichotomy_check needs two distinct vertices");
  for (int v = 0; v < g.order(); ++v)
    if (v != x && v != y && g.degree(v) < 3)
      throw std::invalid_argument(
          "precondition violated: a vertex other than x,y has degree < 3");
  if (!augmented_two_connected(g, x, y))
    throw std::invalid_argument("precondition violated: g+xy is not 2-connected");

  if (auto cycle = has_cycle_mod(g, 2, 4)) {
    TrichotomyOutcome out;
    out.kind = TrichotomyOutcome::Kind::cycle_2_mod_4;
    out.cycle = std::move(*cycle);
    return out;
  }
  PathSpectrum ps = path_spectrum(g, x, y);
  std::vector<int> lengths(ps.lengths.begin(), ps.lengths.end());
  for (std::size_t i = 0; i < lengths.size(); ++i)
    for (std::size_t j = i + 1; j < lengths.size(); ++j)
      if ((lengths[j] - lengths[i]) % 4 == 2) {
        TrichotomyOutcome out;
        out.kind = TrichotomyOutcome::Kind::path_pair;
        out.path_a = ps.witnesses.at(lengths[i]);
        out.path_b = ps.witnesses.at(lengths[j]);
        return out;
      }
  for (int i = 1; i <= 4; ++i) {
    MarkedGraph tmpl = l_construction(i);
    if (marked_isomorphic(g, x, y, tmpl.graph, tmpl.mark("x"), tmpl.mark("y"))) {
      TrichotomyOutcome out;
      out.kind = TrichotomyOutcome::Kind::construction;
      out.construction_index = i;
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Runner

namespace {

using detail::ExpandHooks;
using detail::RawGraph;
using detail::VisitAction;

struct SpecTally {
  long hits = 0, holds = 0, aux = 0;
  std::map<std::pair<int, std::string>, std::pair<std::string, long>> exceptions;
  std::vector<std::string> counterexamples;
  std::vector<std::string> findings;

  void merge_from(const SpecTally& o) {
    hits += o.hits;
    holds += o.holds;
    aux += o.aux;
    for (const auto& [key, value] : o.exceptions) {
      auto& slot = exceptions[key];
      slot.first = value.first;
      slot.second += value.second;
    }
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
    findings.insert(findings.end(), o.findings.begin(), o.findings.end());
  }
};

struct RunBlock {
  long classes = 0;
  std::vector<SpecTally> per;

  explicit RunBlock(std::size_t nspecs = 0) : per(nspecs) {}
  void merge_from(const RunBlock& o) {
    classes += o.classes;
    for (std::size_t i = 0; i < per.size(); ++i) per[i].merge_from(o.per[i]);
  }
};

// Precomputed exception templates: per spec, per order, (code, name, graph6).
struct ExceptionTemplates {
  struct Entry {
    std::string code_bytes;
    std::string name;
    std::string graph6;
  };
  std::vector<std::map<int, std::vector<Entry>>> per_spec;

  ExceptionTemplates(const std::vector<TheoremSpec>& specs, int n_max) {
    per_spec.resize(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
      for (const auto& family : specs[i].exceptions)
        for (int n = 3; n <= n_max; ++n)
          if (auto inst = family.instance(n)) {
            std::string code = canonical_code(inst->first).bytes;
            per_spec[i][n].push_back({code, inst->second, code});
          }
  }
};

struct Runner {
  const std::vector<TheoremSpec>& specs;
  const VerifyOptions& opt;
  int n_max;
  ExceptionTemplates templates;

  Runner(const std::vector<TheoremSpec>& s, const VerifyOptions& o, int nm)
      : specs(s), opt(o), n_max(nm), templates(s, nm) {}

  void process(const Graph& g, RunBlock& block) const {
    ++block.classes;
    if (opt.observer) opt.observer(g);

    std::vector<std::size_t> graph_specs;
    std::vector<ResidueTarget> targets;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      const TheoremSpec& spec = specs[i];
      if (spec.quantifier != TheoremSpec::Quantifier::graph) continue;
      if (!filter_passes(spec.hypothesis, g)) continue;
      if (spec.extra_hypothesis && !spec.extra_hypothesis(g)) continue;
      graph_specs.push_back(i);
      targets.insert(targets.end(), spec.residue_targets.begin(),
                     spec.residue_targets.end());
    }

    SpectrumProbe probe(g);
    if (!targets.empty()) probe.ensure_targets(targets);
    std::optional<std::string> code;  // canonical graph6, computed lazily

    for (std::size_t i : graph_specs) {
      const TheoremSpec& spec = specs[i];
      SpecTally& tally = block.per[i];
      ++tally.hits;
      if (spec.conclusion(g, probe)) {
        ++tally.holds;
        continue;
      }
      if (!code) code = canonical_code(g).bytes;
      bool matched = false;
      auto order_it = templates.per_spec[i].find(g.order());
      if (order_it != templates.per_spec[i].end())
        for (const auto& entry : order_it->second)
          if (entry.code_bytes == *code) {
            auto& slot = tally.exceptions[{g.order(), entry.name}];
            slot.first = entry.graph6;
            slot.second += 1;
            matched = true;
            break;
          }
      if (!matched) {
        if (spec.informational)
          tally.findings.push_back(*code);
        else
          tally.counterexamples.push_back(*code);
      }
    }

    for (std::size_t i = 0; i < specs.size(); ++i) {
      const TheoremSpec& spec = specs[i];
      if (spec.quantifier == TheoremSpec::Quantifier::graph) continue;
      if (!filter_passes(spec.hypothesis, g)) continue;
      if (spec.extra_hypothesis && !spec.extra_hypothesis(g)) continue;
      bool with_z = spec.quantifier == TheoremSpec::Quantifier::vertex_pair_with_z;
      SpecTally& tally = block.per[i];
      for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y) {
          if (x == y) continue;
          for (int z = with_z ? 0 : -1; z < (with_z ? g.order() : 0); ++z) {
            if (with_z && (z == x || z == y)) continue;
            if (!spec.tuple_hypothesis(g, x, y, z)) continue;
            ++tally.hits;
            if (spec.tuple_aux && spec.tuple_aux(g, x, y, z)) ++tally.aux;
            if (spec.tuple_conclusion(g, x, y, z)) {
              ++tally.holds;
            } else {
              std::string entry = write_graph6(g) + " x=" + std::to_string(x) +
                                  " y=" + std::to_string(y);
              if (with_z) entry += " z=" + std::to_string(z);
              if (spec.informational)
                tally.findings.push_back(entry);
              else
                tally.counterexamples.push_back(entry);
            }
          }
        }
    }
  }

  ExpandHooks make_hooks(RunBlock& block) const {
    ExpandHooks hooks;
    hooks.visit = [this, &block](const RawGraph& raw) {
      if (raw.n >= 3) process(raw.to_graph(), block);
      return VisitAction::descend;
    };
    // Degree pruning is sound only at the weakest bound over all specs.
    int degree_floor = std::numeric_limits<int>::max();
    for (const auto& spec : specs)
      degree_floor = std::min(degree_floor, spec.hypothesis.min_degree.value_or(0));
    if (degree_floor > 0) {
      int nm = n_max;
      hooks.prune_child = [degree_floor, nm](const RawGraph& child) {
        int slack = nm - child.n;
        for (int v = 0; v < child.n; ++v)
          if (child.degree(v) + slack < degree_floor) return true;
        return false;
      };
    }
    return hooks;
  }

  VerificationReport report_for(std::size_t i, const RunBlock& total,
                                std::optional<EnumerationCursor> cursor) const {
    const TheoremSpec& spec = specs[i];
    const SpecTally& tally = total.per[i];
    VerificationReport rep;
    rep.theorem_id = spec.id;
    rep.title = spec.title;
    rep.params = spec.params;
    rep.n_max = n_max;
    rep.classes_enumerated = total.classes;
    rep.hypothesis_hits = tally.hits;
    rep.conclusion_holds = tally.holds;
    for (const auto& [key, value] : tally.exceptions)
      rep.exceptions.push_back({key.second, key.first, value.first, value.second});
    rep.counterexamples = tally.counterexamples;
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end());
    rep.findings = tally.findings;
    std::sort(rep.findings.begin(), rep.findings.end());
    if (spec.tuple_aux) {
      rep.aux_holds = tally.aux;
      rep.aux_label = spec.aux_label;
    }
    if (tally.hits == 0) rep.note = "vacuous at this scale";
    rep.cursor = cursor;
    return rep;
  }
};

RunBlock block_from_report(const VerificationReport& rep, std::size_t nspecs) {
  RunBlock block(nspecs);
  block.classes = rep.classes_enumerated;
  SpecTally& tally = block.per[0];
  tally.hits = rep.hypothesis_hits;
  tally.holds = rep.conclusion_holds;
  tally.aux = std::max<long>(rep.aux_holds, 0);
  for (const auto& hit : rep.exceptions)
    tally.exceptions[{hit.order, hit.name}] = {hit.graph6, hit.count};
  tally.counterexamples = rep.counterexamples;
  tally.findings = rep.findings;
  return block;
}

}  // namespace

std::vector<VerificationReport> verify_many(const std::vector<TheoremSpec>& specs,
                                            const VerifyOptions& opt) {
  if (specs.empty()) return {};
  auto started = std::chrono::steady_clock::now();

  int n_max = opt.n_max;
  if (n_max <= 0)
    for (const auto& s : specs) n_max = std::max(n_max, s.default_n_max);
  if (n_max < 3 || n_max > kEnumerateOrderCap)
    throw std::invalid_argument("verification needs 3 <= n_max <= " +
                                std::to_string(kEnumerateOrderCap));

  Runner runner(specs, opt, n_max);
  RunBlock total(specs.size());
  std::optional<EnumerationCursor> final_cursor;

  if (opt.graph6_stream) {
    for (const auto& line : *opt.graph6_stream) {
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      if (g.order() < 3 || g.order() > n_max)
        throw std::invalid_argument("stream graph order outside 3..n_max");
      runner.process(g, total);
    }
  } else {
    int split = detail::default_split_depth(n_max);
    long start_branch = 0;
    RunBlock resume_base(specs.size());
    if (opt.resume) {
      if (specs.size() != 1)
        throw std::invalid_argument("resume works on single-spec runs");
      if (opt.resume->theorem_id != specs[0].id ||
          opt.resume->params != specs[0].params || opt.resume->n_max != n_max)
        throw std::invalid_argument(
            "resume report does not match this run's spec and parameters");
      if (!opt.resume->cursor)
        throw std::invalid_argument("resume report carries no cursor");
      if (opt.resume->cursor->split_depth != split)
        throw std::invalid_argument("resume cursor split depth mismatch");
      start_branch = opt.resume->cursor->next_branch;
      resume_base = block_from_report(*opt.resume, specs.size());
    }

    RunBlock prefix_block(specs.size());
    ExpandHooks prefix_hooks = runner.make_hooks(prefix_block);
    auto roots =
        detail::expand_prefix(n_max, split, prefix_hooks, !opt.resume);

    long end_branch = static_cast<long>(roots.size());
    if (opt.limit_branches >= 0)
      end_branch = std::min(end_branch, start_branch + opt.limit_branches);

    std::vector<RunBlock> branch_blocks;
    branch_blocks.reserve(end_branch - start_branch);
    for (long b = start_branch; b < end_branch; ++b)
      branch_blocks.emplace_back(specs.size());

    std::atomic<long> next{start_branch};
    std::mutex done_mu;
    std::vector<char> done(roots.size(), 0);
    long checkpoint_mark = start_branch;

    auto merged_through = [&](long upto) {
      RunBlock merged(specs.size());
      merged.merge_from(resume_base);
      merged.merge_from(prefix_block);
      for (long b = start_branch; b < upto; ++b)
        merged.merge_from(branch_blocks[b - start_branch]);
      return merged;
    };

    auto worker = [&] {
      while (true) {
        long b = next.fetch_add(1);
        if (b >= end_branch) break;
        RunBlock& block = branch_blocks[b - start_branch];
        ExpandHooks hooks = runner.make_hooks(block);
        detail::expand_branch(roots[b], n_max, hooks);
        if (!opt.checkpoint_path.empty() && specs.size() == 1) {
          std::lock_guard<std::mutex> lock(done_mu);
          done[b] = 1;
          long p = checkpoint_mark;
          while (p < end_branch && done[p]) ++p;
          if (p - checkpoint_mark >= std::max(1, opt.checkpoint_every_branches) &&
              p < end_branch) {
            checkpoint_mark = p;
            RunBlock merged = merged_through(p);
            VerificationReport rep = runner.report_for(
                0, merged, EnumerationCursor{split, p});
            std::ofstream out(opt.checkpoint_path);
            out << serialize_report(rep);
          }
        }
      }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    total = merged_through(end_branch);
    if (end_branch < static_cast<long>(roots.size()))
      final_cursor = EnumerationCursor{split, end_branch};
  }

  std::vector<VerificationReport> reports;
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    VerificationReport rep = runner.report_for(i, total, final_cursor);
    rep.runtime_seconds = seconds;
    reports.push_back(std::move(rep));
  }
  return reports;
}

VerificationReport verify_theorem(const TheoremSpec& spec,
                                  const VerifyOptions& opt) {
  return verify_many({spec}, opt)[0];
}

}  // namespace cyclescope
