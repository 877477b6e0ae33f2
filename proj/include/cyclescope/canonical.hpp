#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "cyclescope/graph.hpp"

namespace cyclescope {

/// Isomorphism-invariant identifier: the graph6 encoding of the canonically
/// relabeled graph. Two graphs get equal codes iff they are isomorphic.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

namespace detail {

constexpr int kCodeWords =
    (Graph::kMaxVertices * (Graph::kMaxVertices - 1) / 2 + 63) / 64;

/// Packed upper triangle of the canonically permuted adjacency matrix,
/// column-major, most significant bit first within each word.
struct CanonWords {
  int n = 0;
  std::array<std::uint64_t, kCodeWords> w{};

  friend std::strong_ordering operator<=>(const CanonWords& a,
                                          const CanonWords& b) {
    if (a.n != b.n) return a.n <=> b.n;
    int words = (a.n * (a.n - 1) / 2 + 63) / 64;
    for (int i = 0; i < words; ++i)
      if (a.w[i] != b.w[i]) return a.w[i] <=> b.w[i];
    return std::strong_ordering::equal;
  }
  friend bool operator==(const CanonWords& a, const CanonWords& b) {
    return (a <=> b) == 0;
  }
};

struct CanonLabeling {
  CanonWords code;
  // lab[i] = input vertex placed at canonical position i.
  std::array<std::uint8_t, Graph::kMaxVertices> lab{};
};

/// Degree-refinement plus individualization backtracking over adjacency rows.
/// The canonical form maximizes the packed code over all labelings.
CanonLabeling canonical_labeling(int n, const std::uint64_t* adj);

}  // namespace detail

struct CanonicalForm {
  Graph graph;  // canonically relabeled copy
  // position[v] = canonical index of input vertex v.
  std::array<std::uint8_t, Graph::kMaxVertices> position{};
};

CanonicalForm canonical_form(const Graph& g);
CanonicalCode canonical_code(const Graph& g);

/// Isomorphism respecting two pinned vertices: some bijection g -> h maps
/// gx to hx and gy to hy. Intended for small marked gadgets.
bool marked_isomorphic(const Graph& g, int gx, int gy, const Graph& h, int hx,
                       int hy);

}  // namespace cyclescope
