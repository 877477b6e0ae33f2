#include "cyclescope/graph6.hpp"

#include <vector>

namespace cyclescope {

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw Graph6ParseError(0, "empty graph6 line");
  unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126)
    throw Graph6ParseError(0, "multi-byte graph6 order not supported");
  if (header < 63 || header > 63 + 62)
    throw Graph6ParseError(0, "bad graph6 header byte");
  int n = header - 63;
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < 1 + nbytes)
    throw Graph6ParseError(line.size(), "truncated graph6 bit section");
  if (line.size() > 1 + nbytes)
    throw Graph6ParseError(1 + nbytes, "trailing bytes after graph6 data");

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      unsigned char c = static_cast<unsigned char>(line[1 + bit / 6]);
      if (c < 63 || c > 126)
        throw Graph6ParseError(1 + bit / 6, "graph6 byte out of range");
      if ((c - 63) >> (5 - bit % 6) & 1) edges.push_back({i, j});
    }
  // Padding bits beyond the triangle must be zero.
  for (std::size_t b = nbits; b < nbytes * 6; ++b) {
    unsigned char c = static_cast<unsigned char>(line[1 + b / 6]);
    if (c < 63 || c > 126)
      throw Graph6ParseError(1 + b / 6, "graph6 byte out of range");
    if ((c - 63) >> (5 - b % 6) & 1)
      throw Graph6ParseError(1 + b / 6, "nonzero graph6 padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 output limited to order <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nacc = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++nacc == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nacc = 0;
      }
    }
  if (nacc > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nacc))));
  return out;
}

}  // namespace cyclescope
