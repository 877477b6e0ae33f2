#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclescope/graph.hpp"

namespace cyclescope {

/// A cycle as its vertex sequence: all distinct, consecutive ones adjacent,
/// last adjacent to first. Length = number of vertices = number of edges.
struct CycleCertificate {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

/// A path as its vertex sequence; length = number of edges.
struct PathCertificate {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool validate_cycle(const Graph& g, const CycleCertificate& c);
bool validate_path(const Graph& g, const PathCertificate& p);

/// Achievable cycle lengths with one witness per length. When a search was
/// stopped early, exhaustive is false and lengths is only guaranteed complete
/// for the residues that were requested.
struct Spectrum {
  std::set<int> lengths;
  std::map<int, CycleCertificate> witnesses;
  bool exhaustive = true;

  std::uint64_t length_mask() const {
    std::uint64_t m = 0;
    for (int len : lengths) m |= std::uint64_t{1} << len;
    return m;
  }
};

struct PathSpectrum {
  std::set<int> lengths;
  std::map<int, PathCertificate> witnesses;
};

/// Arithmetic progression of cycle or path lengths with common difference
/// 1 or 2, plus one witness per term.
template <typename Cert>
struct BasicAPFamily {
  int first = 0;
  int difference = 1;
  int count = 0;
  std::vector<Cert> witnesses;
};
using APFamily = BasicAPFamily<CycleCertificate>;
using PathAPFamily = BasicAPFamily<PathCertificate>;

enum class DiagonalClass { diagonal, quasi_diagonal, sub_quasi_diagonal, other };

struct ResidueTarget {
  int modulus = 1;
  int residue = 0;
};

class SpectrumCache;

struct SpectrumOptions {
  /// Stop once every requested residue class has a witnessed length.
  std::vector<ResidueTarget> stop_when;
  /// Extra stop test over the bitmask of found lengths (bit L = length L).
  std::function<bool(std::uint64_t)> stop_predicate;
  bool record_witnesses = true;
  /// Full-spectrum searches are capped at order 16 unless overridden.
  bool override_cap = false;
  SpectrumCache* cache = nullptr;
};

inline constexpr int kSpectrumOrderCap = 16;

/// Exactly the set of cycle lengths of g, each with a witness. Cycles are
/// enumerated by depth-first path extension rooted at the least vertex of
/// each cycle, extending only to larger-labeled vertices and closing back to
/// the root; direction is fixed by comparing the root's two cycle neighbors,
/// so every cycle is seen once.
Spectrum cycle_spectrum(const Graph& g, const SpectrumOptions& opt = {});

/// Exactly the set of (x,y)-path lengths, each with a witness. x != y.
PathSpectrum path_spectrum(const Graph& g, int x, int y);

/// A cycle of length = ell (mod k), or absent if none exists.
std::optional<CycleCertificate> has_cycle_mod(const Graph& g, int ell, int k);

struct ResidueCoverage {
  int modulus = 1;
  std::set<int> residues;
  bool all_covered = false;
  /// Every residue class that contains an even integer is hit. For even k
  /// those are the even classes; for odd k every class qualifies.
  bool all_even_covered = false;
};

ResidueCoverage residue_coverage(const Graph& g, int k);

/// Residue classes mod k containing an even integer.
std::vector<int> even_residues(int k);

/// Longest arithmetic progression with difference d inside a length bitmask.
int max_run(std::uint64_t mask, int d);

/// Size of the largest admissible family (difference 1 or 2) in a mask.
int max_admissible_count(std::uint64_t mask);

/// Maximum admissible cycle family; ties prefer difference 1, then the
/// smaller first length. Rejects acyclic graphs.
APFamily max_admissible_family(const Graph& g);

/// Maximum admissible (x,y)-path family; admissible paths must start at
/// length >= 2. Rejects inputs with no such path.
PathAPFamily max_admissible_path_family(const Graph& g, int x, int y);

/// Distance along the cycle plus the diagonal classification of the pair.
std::pair<int, DiagonalClass> classify_cycle_pair(const CycleCertificate& c,
                                                  int u, int v);

/// Graph on the positions 0..|C|-1 of the cycle, joining quasi-diagonal
/// pairs. Requires |C| >= 5 so each vertex has exactly two such partners.
Graph qdi_graph(const CycleCertificate& c);

/// Concurrent map from canonical code to spectrum results, with witnesses
/// stored in canonical labels and remapped on retrieval. Races are benign:
/// values are deterministic, last writer wins.
class SpectrumCache {
 public:
  struct Entry {
    std::uint64_t length_mask = 0;
    bool exhaustive = false;
    std::map<int, CycleCertificate> canon_witnesses;
  };
  std::optional<Entry> lookup(const std::string& key) const;
  void store(const std::string& key, Entry entry);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> map_;
};

/// Lazy per-graph cycle-length prober used by verification runs: answers
/// residue and family queries, searching no further than each query needs.
class SpectrumProbe {
 public:
  explicit SpectrumProbe(const Graph& g) : g_(g) {}

  /// Search until every target residue is witnessed or the spectrum is done.
  void ensure_targets(const std::vector<ResidueTarget>& targets);
  bool has_cycle_mod(int k, int ell);
  bool has_admissible_family(int k);
  /// Search until pred(found lengths) holds or the spectrum is done, then
  /// report whether it holds.
  bool ensure_predicate(const std::function<bool(std::uint64_t)>& pred);
  std::uint64_t length_mask() const { return found_; }
  bool complete() const { return complete_; }

 private:
  void run(const SpectrumOptions& opt);
  const Graph& g_;
  std::uint64_t found_ = 0;
  bool complete_ = false;
};

}  // namespace cyclescope
