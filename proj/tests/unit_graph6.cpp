#include <doctest.h>

#include "cyclescope/constructions.hpp"
#include "cyclescope/enumerate.hpp"
#include "cyclescope/graph6.hpp"

using namespace cyclescope;

TEST_CASE("graph6 encodes the reference bytes") {
  CHECK(write_graph6(complete(3)) == "Bw");
  CHECK(write_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(write_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(write_graph6(complete(5)) == "D~{");
}

TEST_CASE("graph6 parses what it writes") {
  GraphFilter any;
  for (int n = 1; n <= 7; ++n)
    enumerate_graphs(n, any, [&](const Graph& g) {
      Graph back = parse_graph6(write_graph6(g));
      CHECK(back == g);
      return true;
    });
}

TEST_CASE("graph6 parse errors carry byte offsets") {
  auto offset_of = [](const std::string& line) -> std::size_t {
    try {
      parse_graph6(line);
    } catch (const Graph6ParseError& e) {
      return e.byte_offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("~??") == 0);          // multi-byte order marker
  CHECK(offset_of(std::string(1, 20)) == 0);
  CHECK(offset_of("D~") == 2);           // truncated bit section
  CHECK(offset_of("D~{extra") == 3);     // trailing bytes
  CHECK(offset_of(std::string("B") + char(30)) == 1);
  CHECK(offset_of("B~") == 1);           // nonzero padding bits
}

TEST_CASE("graph6 writing is limited to order 62") {
  std::vector<std::pair<int, int>> edges;
  CHECK_THROWS_AS(write_graph6(Graph::from_edges(63, edges)),
                  std::invalid_argument);
}
