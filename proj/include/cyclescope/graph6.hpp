#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclescope/graph.hpp"

namespace cyclescope {

/// Raised on malformed graph6 input; byte_offset points at the offending byte
/// (or one past the end for truncated input).
struct Graph6ParseError : std::runtime_error {
  Graph6ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), byte_offset(offset) {}
  std::size_t byte_offset;
};

/// One graph6 line: header byte 63+n (n <= 62), then the upper triangle of
/// the adjacency matrix in column-major order, 6 bits per byte offset by 63,
/// zero-padded. The multi-byte order extension is not accepted.
Graph parse_graph6(std::string_view line);

/// Inverse of parse_graph6. Rejects orders above 62.
std::string write_graph6(const Graph& g);

}  // namespace cyclescope
