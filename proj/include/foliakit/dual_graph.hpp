#pragma once

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace foliakit {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tiles are vertices; each edge is a component of L shared by two tiles.
struct DualGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline DualGraph make_dual_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  }
  return DualGraph{n, std::move(edges)};
}

// First line: vertex count. Then one "j k" pair per line.
inline DualGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string probe;
    if (!(ls >> probe)) continue;
    ls.clear();
    ls.str(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0) throw GraphError("line " + std::to_string(lineno) + ": bad vertex count");
    } else {
      long long a = 0, b = 0;
      if (!(ls >> a >> b) || a < 0 || b < 0) {
        throw GraphError("line " + std::to_string(lineno) + ": expected two vertex indices");
      }
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    std::string rest;
    if (ls >> rest) throw GraphError("line " + std::to_string(lineno) + ": trailing input");
  }
  if (n < 0) throw GraphError("missing vertex count");
  return make_dual_graph(static_cast<std::size_t>(n), std::move(edges));
}

struct OddCycle {
  std::vector<std::size_t> vertices;  // closed walk v0 v1 ... v_{m-1} (v_{m-1} adjacent to v0)
};

using OrientationResult = std::variant<std::vector<int>, OddCycle>;

// Assigns +1/-1 to tiles so that adjacent tiles differ; each connected
// component is rooted at its lowest vertex with +1.
inline OrientationResult alternating_orientation(const DualGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (const auto& [a, b] : g.edges) {
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    adj.at(a).push_back(b);
    adj.at(b).push_back(a);
  }
  std::vector<int> sign(g.vertex_count, 0);
  std::vector<std::size_t> parent(g.vertex_count, 0);
  std::vector<std::size_t> depth(g.vertex_count, 0);
  for (std::size_t root = 0; root < g.vertex_count; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    parent[root] = root;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (sign[v] == 0) {
          sign[v] = -sign[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (sign[v] == sign[u]) {
          // Tree paths from u and v meet at their lowest common ancestor.
          std::vector<std::size_t> left, right;
          std::size_t a = u, b = v;
          while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
          while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
          while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          left.push_back(a);
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return OddCycle{std::move(left)};
        }
      }
    }
  }
  return sign;
}

}  // namespace foliakit
