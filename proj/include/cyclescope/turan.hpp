#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclescope/graph.hpp"

namespace cyclescope {

inline constexpr int kTuranOrderCap = 10;

/// Exact maximum edge count of an n-vertex graph with no cycle of length
/// ell mod k, with extremal classes when requested.
struct TuranResult {
  int n = 0;
  int ell = 0;
  int k = 1;
  int max_edges = 0;
  std::string lower_bound_witness;   // graph6, canonical labeling
  std::vector<std::string> extremal; // all extremal classes, sorted; only
                                     // filled by the completeness pass
  long search_nodes = 0;
};

struct TuranOptions {
  bool all_extremal = false;
  bool override_cap = false;
  int jobs = 1;  // used by the completeness pass
};

/// Branch-and-bound over canonical augmentation of forbidden-cycle-free
/// graphs. The value pass is serial (deterministic node counts); the
/// completeness pass reruns against the settled optimum and may run in
/// parallel, collecting every extremal class.
TuranResult max_edges_without(int n, int ell, int k,
                              const TuranOptions& opt = {});

/// Closed forms compared against search results, per n.
struct TuranTableRow {
  int n = 0;
  int max_edges = 0;
  std::optional<long> formula;  // absent when no closed form applies
  std::string regime;           // note, e.g. small-n regime marker
  bool match = true;            // false flags a formula mismatch
};

struct TuranTable {
  int ell = 0;
  int k = 1;
  std::vector<TuranTableRow> rows;
  bool all_match = true;
};

/// Known closed form for ex(n, cycles of length ell mod k), if any:
/// k=2,ell=0: floor(3(n-1)/2); k=3,ell=0: 2(n-2) for n>=3;
/// k=3,ell=2: 3(n-3) for n>=5; k=4,ell=0: floor(19(n-1)/12);
/// odd k>=5, ell=0: (k-1)(n-k+1) for n >= 2k-3;
/// odd k, ell=2: k(n-k) for n >= 2k (informational small-n regime below).
std::optional<long> turan_closed_form(int n, int ell, int k,
                                      std::string* regime_note = nullptr);

TuranTable turan_table(int k, int ell, int n_from, int n_to,
                       const TuranOptions& opt = {});

}  // namespace cyclescope
