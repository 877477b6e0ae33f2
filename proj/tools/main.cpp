// Command-line front end: analyze one graph, verify a registered theorem
// over exhaustive enumeration, compute exact extremal edge counts, generate
// named graphs. Exit codes: 0 success/verified, 1 counterexample found,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cyclescope/canonical.hpp"
#include "cyclescope/constructions.hpp"
#include "cyclescope/enumerate.hpp"
#include "cyclescope/graph6.hpp"
#include "cyclescope/report.hpp"
#include "cyclescope/spectrum.hpp"
#include "cyclescope/turan.hpp"
#include "cyclescope/verify.hpp"

namespace cs = cyclescope;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

// Edge-list file format: first line "n m", then m lines "u v", 0-based.
cs::Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_int = [&]() -> long {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw cs::Graph6ParseError(start, "expected a non-negative integer");
    return std::stol(text.substr(start, pos - start));
  };
  long n = read_int();
  long m = read_int();
  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < m; ++i) {
    int u = static_cast<int>(read_int());
    int v = static_cast<int>(read_int());
    edges.push_back({u, v});
  }
  skip_ws();
  if (pos != text.size())
    throw cs::Graph6ParseError(pos, "trailing input after edge list");
  return cs::Graph::from_edges(static_cast<int>(n), edges);
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

std::string vertex_set_string(cs::VertexSet s) {
  std::vector<int> vs;
  for (cs::VertexSet m = s; m; m &= m - 1) vs.push_back(std::countr_zero(m));
  return join_ints(vs);
}

int run_analyze(const std::string& input, const std::string& edge_list_path,
                const std::vector<int>& moduli, bool show_family_witnesses,
                bool show_blocks, bool quiet, bool override_cap) {
  cs::Graph g;
  try {
    if (!edge_list_path.empty()) {
      std::ifstream in(edge_list_path);
      if (!in) {
        std::cerr << "cannot open " << edge_list_path << "\n";
        return kExitUsage;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      g = parse_edge_list(buf.str());
    } else {
      g = cs::parse_graph6(input);
    }
  } catch (const cs::Graph6ParseError& e) {
    std::cerr << "parse error at byte " << e.byte_offset << ": " << e.what()
              << "\n";
    return kExitUsage;
  }

  cs::Spectrum spectrum;
  try {
    cs::SpectrumOptions sopt;
    sopt.override_cap = override_cap;
    spectrum = cs::cycle_spectrum(g, sopt);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << " (use --override-cap)\n";
    return kExitUsage;
  }
  std::vector<int> lengths(spectrum.lengths.begin(), spectrum.lengths.end());

  if (quiet) {
    std::cout << "spectrum: " << join_ints(lengths) << "\n";
    return kExitVerified;
  }

  std::ostringstream os;
  os << "report: analyze\n";
  os << "version: " << cs::kReportVersion << "\n";
  os << "n: " << g.order() << "\n";
  os << "edges: " << g.edge_count() << "\n";
  os << "min_degree: " << (g.order() ? cs::min_degree(g) : 0) << "\n";
  os << "connectivity: " << (g.order() >= 2 ? cs::vertex_connectivity(g) : 0)
     << "\n";
  if (auto bp = cs::bipartition(g)) {
    os << "bipartite: yes\n";
    os << "side_a: " << vertex_set_string(bp->side_a) << "\n";
    os << "side_b: " << vertex_set_string(bp->side_b) << "\n";
  } else {
    os << "bipartite: no\n";
  }
  if (cs::is_connected(g)) {
    cs::BlockDecomposition bd = cs::block_decomposition(g);
    os << "blocks: " << bd.blocks.size() << "\n";
    os << "cut_vertices: " << cs::set_size(bd.cut_vertices) << "\n";
    os << "end_blocks: " << bd.end_blocks.size() << "\n";
    os << "block_chain: " << (bd.is_block_chain ? "yes" : "no") << "\n";
    if (show_blocks)
      for (std::size_t i = 0; i < bd.blocks.size(); ++i)
        os << "block_" << i << ": " << vertex_set_string(bd.blocks[i]) << "\n";
  } else {
    os << "blocks: disconnected (" << cs::component_count(g) << " components)\n";
  }
  if (auto girth = cs::girth(g))
    os << "girth: " << *girth << "\n";
  else
    os << "girth: none\n";
  os << "spectrum: " << join_ints(lengths) << "\n";
  if (lengths.empty()) {
    os << "family: none (acyclic)\n";
  } else {
    cs::APFamily family = cs::max_admissible_family(g);
    os << "family_count: " << family.count << "\n";
    os << "family_first: " << family.first << "\n";
    os << "family_difference: " << family.difference << "\n";
    if (show_family_witnesses)
      for (const auto& w : family.witnesses) {
        os << "family_witness_" << w.length() << ":";
        for (int v : w.vertices) os << " " << v;
        os << "\n";
      }
  }
  for (int k : moduli) {
    cs::ResidueCoverage rc = cs::residue_coverage(g, k);
    std::vector<int> rs(rc.residues.begin(), rc.residues.end());
    os << "mod_" << k << "_residues: " << join_ints(rs) << "\n";
    os << "mod_" << k << "_all_covered: " << (rc.all_covered ? "yes" : "no")
       << "\n";
    os << "mod_" << k
       << "_all_even_covered: " << (rc.all_even_covered ? "yes" : "no") << "\n";
  }
  std::cout << os.str();
  return kExitVerified;
}

int run_verify(const std::string& theorem, const std::map<std::string, long>& overrides,
               int n_max, int jobs, long limit_branches,
               const std::string& resume_path, const std::string& checkpoint_path,
               int checkpoint_every, const std::string& graphs_path, bool quiet) {
  auto spec = cs::find_spec(theorem, overrides);
  if (!spec) {
    std::cerr << "unknown theorem id '" << theorem << "'. Registered:\n";
    for (const auto& s : cs::registered_specs())
      std::cerr << "  " << s.id << "\n";
    return kExitUsage;
  }

  cs::VerifyOptions opt;
  opt.n_max = n_max;
  opt.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  opt.limit_branches = limit_branches;
  opt.checkpoint_path = checkpoint_path;
  if (checkpoint_every > 0) opt.checkpoint_every_branches = checkpoint_every;

  cs::VerificationReport resume_report;
  if (!resume_path.empty()) {
    std::ifstream in(resume_path);
    if (!in) {
      std::cerr << "cannot open " << resume_path << "\n";
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    resume_report = cs::parse_verification_report(buf.str());
    opt.resume = &resume_report;
  }

  std::vector<std::string> stream_lines;
  if (!graphs_path.empty()) {
    std::ifstream in(graphs_path);
    if (!in) {
      std::cerr << "cannot open " << graphs_path << "\n";
      return kExitUsage;
    }
    std::string line;
    while (std::getline(in, line))
      if (!line.empty() && line[0] != '>') stream_lines.push_back(line);
    opt.graph6_stream = &stream_lines;
  }

  cs::VerificationReport report;
  try {
    report = cs::verify_theorem(*spec, opt);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  if (quiet)
    std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
  else
    std::cout << cs::serialize_report(report);
  std::cerr << "completed in " << report.runtime_seconds << " s\n";
  return report.clean() ? kExitVerified : kExitCounterexample;
}

int run_turan(int n, int ell, int k, bool all_extremal, int jobs,
              bool override_cap, bool quiet) {
  cs::TuranOptions opt;
  opt.all_extremal = all_extremal;
  opt.override_cap = override_cap;
  opt.jobs = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  cs::TuranResult res;
  try {
    res = cs::max_edges_without(n, ell, k, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what();
    if (std::string(e.what()).find("capped") != std::string::npos)
      std::cerr << " (use --override-cap)";
    std::cerr << "\n";
    return kExitUsage;
  }
  if (quiet)
    std::cout << "max_edges: " << res.max_edges << "\n";
  else
    std::cout << cs::serialize_report(res);
  return kExitVerified;
}

// Generator names: petersen | hypo:{1,3} | f:R | l:I | kst:s,t[,minus] |
// theta:a,b,c | complete:n
int run_gen(const std::string& name) {
  cs::Graph g;
  std::map<std::string, int> marks;
  try {
    auto num = [](const std::string& s) -> int {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument("bad number: " + s);
      return v;
    };
    auto split = [](const std::string& s, char sep) {
      std::vector<std::string> parts;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, sep)) parts.push_back(item);
      return parts;
    };
    if (name == "petersen") {
      g = cs::petersen();
    } else if (name.rfind("hypo:", 0) == 0) {
      std::string body = name.substr(5);
      if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw std::invalid_argument("hypo wants hypo:{positions}");
      std::set<int> positions;
      std::string inner = body.substr(1, body.size() - 2);
      if (!inner.empty())
        for (const auto& part : split(inner, ',')) positions.insert(num(part));
      g = cs::hypo_petersen(positions);
    } else if (name.rfind("f:", 0) == 0) {
      cs::MarkedGraph mg = cs::f_graph(num(name.substr(2)));
      g = mg.graph;
      marks = mg.marks;
    } else if (name.rfind("l:", 0) == 0) {
      cs::MarkedGraph mg = cs::l_construction(num(name.substr(2)));
      g = mg.graph;
      marks = mg.marks;
    } else if (name.rfind("kst:", 0) == 0) {
      auto parts = split(name.substr(4), ',');
      bool minus = parts.size() == 3 && parts[2] == "minus";
      if (parts.size() != 2 && !minus)
        throw std::invalid_argument("kst wants kst:s,t or kst:s,t,minus");
      g = cs::complete_bipartite(num(parts[0]), num(parts[1]), minus);
    } else if (name.rfind("theta:", 0) == 0) {
      auto parts = split(name.substr(6), ',');
      if (parts.size() != 3) throw std::invalid_argument("theta wants theta:a,b,c");
      cs::MarkedGraph mg = cs::theta_graph(num(parts[0]), num(parts[1]), num(parts[2]));
      g = mg.graph;
      marks = mg.marks;
    } else if (name.rfind("complete:", 0) == 0) {
      g = cs::complete(num(name.substr(9)));
    } else {
      throw std::invalid_argument("unknown generator name: " + name);
    }
    std::cout << cs::write_graph6(g) << "\n";
    if (!marks.empty()) {
      std::cout << "# marks:";
      for (const auto& [label, v] : marks) std::cout << " " << label << "=" << v;
      std::cout << "\n";
    }
    return kExitVerified;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph cycle-spectrum analysis and exhaustive verification"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze one graph");
  std::string g6_input, edge_list_path;
  std::vector<int> moduli;
  bool family_witnesses = false, show_blocks = false, quiet_analyze = false;
  bool analyze_override = false;
  analyze->add_option("graph6", g6_input, "graph6 line");
  analyze->add_option("--edge-list", edge_list_path, "edge-list file (n m, then u v lines)");
  analyze->add_option("--mod", moduli, "report residue coverage for this modulus");
  analyze->add_flag("--family", family_witnesses, "print admissible-family witnesses");
  analyze->add_flag("--blocks", show_blocks, "print per-block vertex sets");
  analyze->add_flag("--quiet", quiet_analyze, "print only the spectrum");
  analyze->add_flag("--override-cap", analyze_override, "lift the spectrum order cap");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustively verify a theorem");
  std::string theorem, resume_path, checkpoint_path, graphs_path;
  long k_param = -1, r_param = -1;
  int n_max = 0, jobs = 0, checkpoint_every = 0;
  long limit_branches = -1;
  bool quiet_verify = false;
  verify->add_option("--theorem", theorem, "registered theorem id")->required();
  verify->add_option("--k", k_param, "theorem parameter k");
  verify->add_option("--r", r_param, "theorem parameter r");
  verify->add_option("--n-max", n_max, "verify orders 3..n_max");
  verify->add_option("--jobs", jobs, "worker threads (default: cores)");
  verify->add_option("--limit-branches", limit_branches,
                     "process only this many branches, emit a cursor");
  verify->add_option("--resume", resume_path, "resume from a report file");
  verify->add_option("--checkpoint", checkpoint_path, "write a running report here");
  verify->add_option("--checkpoint-every", checkpoint_every,
                     "checkpoint frequency in branches");
  verify->add_option("--graphs", graphs_path,
                     "verify these graph6 lines instead of enumerating");
  verify->add_flag("--quiet", quiet_verify, "print only the counterexample count");

  // turan
  auto* turan = app.add_subcommand("turan", "exact extremal edge count");
  int tn = 0, tell = 0, tk = 0, tjobs = 0;
  bool all_extremal = false, turan_override = false, quiet_turan = false;
  turan->add_option("--n", tn, "order")->required();
  turan->add_option("--ell", tell, "residue")->required();
  turan->add_option("--k", tk, "modulus")->required();
  turan->add_flag("--all-extremal", all_extremal, "collect every extremal class");
  turan->add_option("--jobs", tjobs, "worker threads for the completeness pass");
  turan->add_flag("--override-cap", turan_override, "lift the order cap");
  turan->add_flag("--quiet", quiet_turan, "print only max_edges");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
  std::string gen_name;
  gen->add_option("--name", gen_name, "petersen | hypo:{..} | f:R | l:I | kst:s,t[,minus] | theta:a,b,c | complete:n")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (analyze->parsed()) {
    if (g6_input.empty() == edge_list_path.empty()) {
      std::cerr << "analyze wants exactly one of: a graph6 argument, --edge-list\n";
      return kExitUsage;
    }
    return run_analyze(g6_input, edge_list_path, moduli, family_witnesses,
                       show_blocks, quiet_analyze, analyze_override);
  }
  if (verify->parsed()) {
    std::map<std::string, long> overrides;
    if (k_param >= 0) overrides["k"] = k_param;
    if (r_param >= 0) overrides["r"] = r_param;
    return run_verify(theorem, overrides, n_max, jobs, limit_branches,
                      resume_path, checkpoint_path, checkpoint_every,
                      graphs_path, quiet_verify);
  }
  if (turan->parsed())
    return run_turan(tn, tell, tk, all_extremal, tjobs, turan_override,
                     quiet_turan);
  if (gen->parsed()) return run_gen(gen_name);
  return kExitUsage;
}
