#include "cyclescope/report.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclescope {

namespace {

void emit_kv(std::ostream& os, const char* key, const std::string& value) {
  os << key << ": " << value << "\n";
}

void emit_kv(std::ostream& os, const char* key, long value) {
  os << key << ": " << value << "\n";
}

void emit_string_list(std::ostream& os, const char* key,
                      const std::vector<std::string>& items) {
  if (items.empty()) {
    os << key << ": []\n";
    return;
  }
  os << key << ":\n";
  for (const auto& s : items) os << "  - " << s << "\n";
}

}  // namespace

std::string serialize_report(const VerificationReport& r) {
  std::ostringstream os;
  emit_kv(os, "report", std::string("verify"));
  emit_kv(os, "version", std::string(kReportVersion));
  emit_kv(os, "theorem", r.theorem_id);
  emit_kv(os, "title", r.title);
  if (r.params.empty()) {
    os << "params: {}\n";
  } else {
    os << "params:\n";
    for (const auto& [key, value] : r.params)
      os << "  " << key << ": " << value << "\n";
  }
  emit_kv(os, "n_min", r.n_min);
  emit_kv(os, "n_max", r.n_max);
  emit_kv(os, "classes_enumerated", r.classes_enumerated);
  emit_kv(os, "hypothesis_hits", r.hypothesis_hits);
  emit_kv(os, "conclusion_holds", r.conclusion_holds);
  if (r.exceptions.empty()) {
    os << "exceptions_matched: []\n";
  } else {
    os << "exceptions_matched:\n";
    for (const auto& e : r.exceptions) {
      os << "  - name: " << e.name << "\n";
      os << "    order: " << e.order << "\n";
      os << "    graph6: " << e.graph6 << "\n";
      os << "    count: " << e.count << "\n";
    }
  }
  emit_string_list(os, "counterexamples", r.counterexamples);
  emit_string_list(os, "findings", r.findings);
  if (r.aux_holds >= 0) {
    os << "aux:\n";
    os << "  label: " << r.aux_label << "\n";
    os << "  count: " << r.aux_holds << "\n";
  }
  if (!r.note.empty()) emit_kv(os, "note", r.note);
  if (r.cursor) {
    os << "cursor:\n";
    os << "  split_depth: " << r.cursor->split_depth << "\n";
    os << "  next_branch: " << r.cursor->next_branch << "\n";
  }
  return os.str();
}

std::string serialize_report(const TuranResult& r) {
  std::ostringstream os;
  emit_kv(os, "report", std::string("turan"));
  emit_kv(os, "version", std::string(kReportVersion));
  emit_kv(os, "n", r.n);
  emit_kv(os, "ell", r.ell);
  emit_kv(os, "k", r.k);
  emit_kv(os, "max_edges", r.max_edges);
  emit_kv(os, "lower_bound_witness", r.lower_bound_witness);
  emit_kv(os, "search_nodes", r.search_nodes);
  if (!r.extremal.empty()) {
    emit_kv(os, "extremal_count", static_cast<long>(r.extremal.size()));
    emit_string_list(os, "extremal", r.extremal);
  }
  return os.str();
}

namespace {

struct LineReader {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }
  bool done() const { return pos >= lines.size(); }
  const std::string& peek() const { return lines[pos]; }
  std::string next() { return lines[pos++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("report parse error at line " +
                             std::to_string(pos + 1) + ": " + why);
  }
};

// Splits "key: value" (prefix stripped) into key and the raw value text.
std::pair<std::string, std::string> split_kv(LineReader& r,
                                             const std::string& line) {
  auto colon = line.find(": ");
  if (colon == std::string::npos) {
    if (!line.empty() && line.back() == ':')
      return {line.substr(0, line.size() - 1), ""};
    r.fail("expected 'key: value'");
  }
  return {line.substr(0, colon), line.substr(colon + 2)};
}

long to_long(LineReader& r, const std::string& s) {
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    r.fail("expected an integer, got '" + s + "'");
  }
}

std::vector<std::string> parse_string_list(LineReader& r) {
  std::vector<std::string> out;
  while (!r.done() && r.peek().rfind("  - ", 0) == 0)
    out.push_back(r.next().substr(4));
  return out;
}

}  // namespace

VerificationReport parse_verification_report(const std::string& text) {
  LineReader r(text);
  VerificationReport rep;
  bool saw_header = false;
  while (!r.done()) {
    std::string line = r.next();
    if (line.empty()) continue;
    auto [key, value] = split_kv(r, line);
    if (key == "report") {
      if (value != "verify") r.fail("not a verify report");
      saw_header = true;
    } else if (key == "version" || key == "title") {
      if (key == "title") rep.title = value;
    } else if (key == "theorem") {
      rep.theorem_id = value;
    } else if (key == "params") {
      if (value == "{}") continue;
      while (!r.done() && r.peek().rfind("  ", 0) == 0 &&
             r.peek().rfind("  - ", 0) != 0) {
        auto [pk, pv] = split_kv(r, r.next().substr(2));
        rep.params[pk] = to_long(r, pv);
      }
    } else if (key == "n_min") {
      rep.n_min = static_cast<int>(to_long(r, value));
    } else if (key == "n_max") {
      rep.n_max = static_cast<int>(to_long(r, value));
    } else if (key == "classes_enumerated") {
      rep.classes_enumerated = to_long(r, value);
    } else if (key == "hypothesis_hits") {
      rep.hypothesis_hits = to_long(r, value);
    } else if (key == "conclusion_holds") {
      rep.conclusion_holds = to_long(r, value);
    } else if (key == "exceptions_matched") {
      if (value == "[]") continue;
      while (!r.done() && r.peek().rfind("  - name: ", 0) == 0) {
        ExceptionHit hit;
        hit.name = r.next().substr(10);
        auto expect = [&](const char* field) -> std::string {
          if (r.done()) r.fail(std::string("missing exception field ") + field);
          auto [k2, v2] = split_kv(r, r.next());
          if (k2 != std::string("    ") + field)
            r.fail(std::string("expected exception field ") + field);
          return v2;
        };
        hit.order = static_cast<int>(to_long(r, expect("order")));
        hit.graph6 = expect("graph6");
        hit.count = to_long(r, expect("count"));
        rep.exceptions.push_back(std::move(hit));
      }
    } else if (key == "counterexamples") {
      if (value != "[]") rep.counterexamples = parse_string_list(r);
    } else if (key == "findings") {
      if (value != "[]") rep.findings = parse_string_list(r);
    } else if (key == "aux") {
      auto [k1, v1] = split_kv(r, r.next());
      auto [k2, v2] = split_kv(r, r.next());
      if (k1 != "  label" || k2 != "  count") r.fail("bad aux block");
      rep.aux_label = v1;
      rep.aux_holds = to_long(r, v2);
    } else if (key == "note") {
      rep.note = value;
    } else if (key == "cursor") {
      auto [k1, v1] = split_kv(r, r.next());
      auto [k2, v2] = split_kv(r, r.next());
      if (k1 != "  split_depth" || k2 != "  next_branch")
        r.fail("bad cursor block");
      rep.cursor = EnumerationCursor{static_cast<int>(to_long(r, v1)),
                                     to_long(r, v2)};
    } else {
      r.fail("unknown key '" + key + "'");
    }
  }
  if (!saw_header) throw std::runtime_error("missing 'report: verify' header");
  return rep;
}

}  // namespace cyclescope
