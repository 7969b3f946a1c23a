#ifndef ODDCHROM_SRC_BFS_HPP
#define ODDCHROM_SRC_BFS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "oddchrom/graph.hpp"

namespace oddchrom::detail {

inline constexpr std::uint32_t unreached = std::numeric_limits<std::uint32_t>::max();

/// Reusable BFS workspace. Only vertices with `alive[u] != 0` are visited
/// when an alive mask is given. Layers beyond `max_radius` are not expanded.
struct bfs_state {
  std::vector<std::uint32_t> dist;
  std::vector<vertex> parent;
  std::vector<vertex> order; // visit order; layer boundaries are monotone

  explicit bfs_state(std::size_t n) : dist(n, unreached), parent(n, 0) {
    order.reserve(n);
  }

  void run(const graph &g, vertex source,
           std::uint32_t max_radius = unreached,
           const std::vector<char> *alive = nullptr) {
    for (vertex u : order)
      dist[u] = unreached;
    order.clear();
    dist[source] = 0;
    parent[source] = source;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const vertex u = order[head];
      if (dist[u] >= max_radius)
        continue;
      for (vertex w : g.neighbors(u)) {
        if (dist[w] != unreached || (alive && !(*alive)[w]))
          continue;
        dist[w] = dist[u] + 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }

  /// Path source -> u, inclusive.
  std::vector<vertex> path_to(vertex u) const {
    std::vector<vertex> path;
    for (;;) {
      path.push_back(u);
      if (parent[u] == u)
        break;
      u = parent[u];
    }
    return {path.rbegin(), path.rend()};
  }
};

} // namespace oddchrom::detail

#endif // ODDCHROM_SRC_BFS_HPP
