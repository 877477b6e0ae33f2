#pragma once

#include <map>
#include <set>
#include <string>

#include "cyclescope/graph.hpp"

namespace cyclescope {

/// A graph with named distinguished vertices ("x", "y", "x1", ...).
struct MarkedGraph {
  Graph graph;
  std::map<std::string, int> marks;

  int mark(const std::string& name) const { return marks.at(name); }
};

Graph complete(int n);

/// K_{s,t}; with minus_edge, the edge between the first vertex of each side
/// is removed (all choices are isomorphic, so a fixed one keeps outputs
/// deterministic). Side s gets vertices 0..s-1.
Graph complete_bipartite(int s, int t, bool minus_edge = false);

/// The Petersen graph: outer 5-cycle 0..4, inner step-2 5-cycle 5..9, spokes.
Graph petersen();

/// Pentagram core x_1..x_5; position i carries either one outer vertex
/// (y_i = z_i) or, when i is in `split`, two private outer vertices
/// y_i != z_i, with outer edges z_i -- y_{i+1} cyclically. The empty split
/// yields the Petersen graph.
Graph hypo_petersen(const std::set<int>& split);

/// Two marked vertices x1, x2 joined by r internally disjoint paths of
/// length 3 and one path of length 2; 2r + 3 vertices. r >= 1.
MarkedGraph f_graph(int r);

/// The four small marked gadgets: a 4-cycle x,u,y,v with chord uv, with a
/// pendant edge appended at x (i=2), at y (i=3), or both (i=4).
MarkedGraph l_construction(int i);

/// Two hubs joined by internally disjoint paths of lengths a <= b <= c.
/// Requires b >= 2 so the graph stays simple. Marks hub1, hub2.
MarkedGraph theta_graph(int a, int b, int c);

/// Guaranteed number of admissible cycles when an s-term progression of
/// connecting path lengths (difference diff_a) meets t external path lengths
/// (difference diff_b, first length >= 2). A one-term progression conforms
/// to either difference, so the mixed-difference bonuses need s and t >= 2.
int combine_count(int s, int diff_a, int t, int diff_b);

}  // namespace cyclescope
