#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclescope/enumerate.hpp"
#include "cyclescope/graph.hpp"
#include "cyclescope/spectrum.hpp"

namespace cyclescope {

/// A family of known exceptional graphs, instantiable per order. instance(n)
/// yields the member at order n with its display name, or nothing.
struct ExceptionFamily {
  std::string label;
  std::function<std::optional<std::pair<Graph, std::string>>(int)> instance;
};

/// Executable statement: hypothesis filter, conclusion predicate, known
/// exceptions. Tuple-quantified statements range over marked vertices
/// (x,y) or (x,y,z) of each enumerated graph instead.
struct TheoremSpec {
  enum class Quantifier { graph, vertex_pair, vertex_pair_with_z };

  std::string id;
  std::string title;
  std::map<std::string, long> params;
  int default_n_max = 8;

  GraphFilter hypothesis;
  std::function<bool(const Graph&)> extra_hypothesis;
  /// Residue classes the conclusion will ask for; lets a shared run stop
  /// each cycle search as early as possible.
  std::vector<ResidueTarget> residue_targets;
  std::function<bool(const Graph&, SpectrumProbe&)> conclusion;
  std::vector<ExceptionFamily> exceptions;

  Quantifier quantifier = Quantifier::graph;
  /// z is -1 for plain vertex pairs.
  std::function<bool(const Graph&, int, int, int)> tuple_hypothesis;
  std::function<bool(const Graph&, int, int, int)> tuple_conclusion;
  /// Optional secondary tally (reported, never asserted).
  std::function<bool(const Graph&, int, int, int)> tuple_aux;
  std::string aux_label;

  /// Informational specs report failures as findings and never fail a run.
  bool informational = false;
};

struct ExceptionHit {
  std::string name;
  int order = 0;
  std::string graph6;
  long count = 0;
};

struct EnumerationCursor {
  int split_depth = 0;
  long next_branch = 0;
};

struct VerificationReport {
  std::string theorem_id;
  std::string title;
  std::map<std::string, long> params;
  int n_min = 3;
  int n_max = 0;
  long classes_enumerated = 0;
  long hypothesis_hits = 0;
  long conclusion_holds = 0;
  std::vector<ExceptionHit> exceptions;      // sorted by order, then name
  std::vector<std::string> counterexamples;  // sorted; expected empty
  std::vector<std::string> findings;         // informational specs only
  long aux_holds = -1;                       // -1 when the spec has no aux
  std::string aux_label;
  std::string note;
  std::optional<EnumerationCursor> cursor;  // present iff the run is partial
  double runtime_seconds = 0;               // never serialized

  bool clean() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  int n_max = 0;  // 0 means the spec default
  int jobs = 1;
  /// Stop after this many branches and emit a resumable cursor (< 0: all).
  long limit_branches = -1;
  /// Prior partial report to continue from (single-spec runs only).
  const VerificationReport* resume = nullptr;
  /// Periodically rewrite a running single-spec report to this path.
  std::string checkpoint_path;
  int checkpoint_every_branches = 64;
  /// Called for every enumerated class (any order >= 3); must be
  /// thread-safe when jobs > 1.
  std::function<void(const Graph&)> observer;
  /// When set, verify these graphs instead of enumerating (graph6 lines).
  const std::vector<std::string>* graph6_stream = nullptr;
};

/// Runs several specs over one shared enumeration. Reports are deterministic
/// for fixed parameters regardless of jobs.
std::vector<VerificationReport> verify_many(const std::vector<TheoremSpec>& specs,
                                            const VerifyOptions& opt = {});

VerificationReport verify_theorem(const TheoremSpec& spec,
                                  const VerifyOptions& opt = {});

/// The full registry, every spec at its default parameters.
const std::vector<TheoremSpec>& registered_specs();

/// Spec by id with parameter overrides applied (validated per spec).
std::optional<TheoremSpec> find_spec(const std::string& id,
                                     const std::map<std::string, long>& overrides = {});

/// Outcome of the two-paths-differing-by-2-mod-4 case split.
struct TrichotomyOutcome {
  enum class Kind { cycle_2_mod_4, path_pair, construction };
  Kind kind = Kind::cycle_2_mod_4;
  CycleCertificate cycle;            // kind == cycle_2_mod_4
  PathCertificate path_a, path_b;    // kind == path_pair
  int construction_index = 0;        // kind == construction, in 1..4
};

/// Checks the outcomes in priority order: a cycle of length 2 mod 4, then
/// two (x,y)-paths with lengths differing by 2 mod 4, then recognition as
/// one of the four marked gadgets. Preconditions (g+xy 2-connected, every
/// other vertex of degree >= 3) are rejected with the violated clause.
/// Empty result means no outcome holds.
std::optional<TrichotomyOutcome> trichotomy_check(const Graph& g, int x, int y);

}  // namespace cyclescope
