#include "cyclescope/constructions.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclescope {

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete(n) needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int s, int t, bool minus_edge) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("complete_bipartite needs s, t >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < s; ++u)
    for (int v = 0; v < t; ++v) {
      if (minus_edge && u == 0 && v == 0) continue;
      edges.push_back({u, s + v});
    }
  return Graph::from_edges(s + t, edges);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return Graph::from_edges(10, edges);
}

Graph hypo_petersen(const std::set<int>& split) {
  for (int i : split)
    if (i < 1 || i > 5)
      throw std::invalid_argument("hypo_petersen split positions must be in 1..5");
  // Core x_1..x_5 at 0..4; outer vertices appended in position order.
  int y[6], z[6];
  int next = 5;
  for (int i = 1; i <= 5; ++i) {
    y[i] = next++;
    z[i] = split.count(i) ? next++ : y[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 5; ++i) {
    edges.push_back({i - 1, (i + 1) % 5});  // pentagram x_i -- x_{i+2}
    edges.push_back({i - 1, y[i]});
    if (z[i] != y[i]) edges.push_back({i - 1, z[i]});
    edges.push_back({z[i], y[i % 5 + 1]});
  }
  return Graph::from_edges(next, edges);
}

MarkedGraph f_graph(int r) {
  if (r < 1) throw std::invalid_argument("f_graph needs r >= 1");
  int x1 = 0, x2 = 1, mid = 2;
  std::vector<std::pair<int, int>> edges{{x1, mid}, {mid, x2}};
  for (int i = 0; i < r; ++i) {
    int yi = 3 + 2 * i, zi = 4 + 2 * i;
    edges.push_back({x1, yi});
    edges.push_back({yi, zi});
    edges.push_back({zi, x2});
  }
  return {Graph::from_edges(2 * r + 3, edges), {{"x1", x1}, {"x2", x2}}};
}

MarkedGraph l_construction(int i) {
  if (i < 1 || i > 4)
    throw std::invalid_argument("l_construction index must be in 1..4");
  // Diamond a,u,b,v with chord uv; pendants come after it.
  int a = 0, u = 1, b = 2, v = 3;
  std::vector<std::pair<int, int>> edges{{a, u}, {u, b}, {a, v}, {v, b}, {u, v}};
  int n = 4, x = a, y = b;
  if (i == 2 || i == 4) {
    x = n++;
    edges.push_back({x, a});
  }
  if (i == 3 || i == 4) {
    y = n++;
    edges.push_back({y, b});
  }
  return {Graph::from_edges(n, edges), {{"x", x}, {"y", y}}};
}

MarkedGraph theta_graph(int a, int b, int c) {
  if (!(a <= b && b <= c))
    throw std::invalid_argument("theta_graph needs a <= b <= c");
  if (a < 1) throw std::invalid_argument("theta_graph needs a >= 1");
  if (b < 2)
    throw std::invalid_argument("theta_graph needs b >= 2 (parallel edges otherwise)");
  int hub1 = 0, hub2 = 1, next = 2;
  std::vector<std::pair<int, int>> edges;
  for (int len : {a, b, c}) {
    int prev = hub1;
    for (int step = 1; step < len; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, hub2});
  }
  return {Graph::from_edges(next, edges), {{"hub1", hub1}, {"hub2", hub2}}};
}

int combine_count(int s, int diff_a, int t, int diff_b) {
  if (s < 1 || t < 1) throw std::invalid_argument("combine_count needs s, t >= 1");
  if ((diff_a != 1 && diff_a != 2) || (diff_b != 1 && diff_b != 2))
    throw std::invalid_argument("combine_count differences must be 1 or 2");
  if (diff_a == diff_b) return s + t - 1;
  // A singleton progression conforms to either difference, so the sum set
  // collapses to the plain s + t - 1 bound when the difference-1 side has
  // one term.
  if (diff_a == 2) return t == 1 ? s + t - 1 : 2 * s + t - 2;
  return s == 1 ? s + t - 1 : s + 2 * t - 2;
}

}  // namespace cyclescope
