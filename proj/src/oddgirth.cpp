#include "oddchrom/oddgirth.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bfs.hpp"

namespace oddchrom {

namespace {

std::optional<sphere_violation> scan_center(const graph &g, vertex v,
                                            std::uint32_t k,
                                            detail::bfs_state &bfs) {
  bfs.run(g, v, k - 1);
  // bfs.order is sorted by layer; collect each layer and sort by index.
  std::vector<vertex> layer;
  std::size_t pos = 1;
  for (std::uint32_t r = 1; r < k && pos < bfs.order.size(); ++r) {
    layer.clear();
    while (pos < bfs.order.size() && bfs.dist[bfs.order[pos]] == r)
      layer.push_back(bfs.order[pos++]);
    std::sort(layer.begin(), layer.end());
    for (vertex a : layer)
      for (vertex b : g.neighbors(a))
        if (a < b && bfs.dist[b] == r)
          return sphere_violation{v, r, {a, b}};
  }
  return std::nullopt;
}

} // namespace

std::optional<odd_cycle_certificate> shortest_odd_cycle(const graph &g) {
  const auto n = g.vertex_count();
  detail::bfs_state bfs(n);
  std::optional<odd_cycle_certificate> best;
  for (vertex root = 0; root < n; ++root) {
    // A same-layer edge at depth r closes a walk of length 2r+1. Only depths
    // that beat the incumbent strictly are explored.
    std::uint32_t max_r = detail::unreached;
    if (best) {
      if (best->length() == 3)
        break;
      max_r = static_cast<std::uint32_t>((best->length() - 3) / 2);
    }
    bfs.run(g, root, max_r);
    std::optional<edge> found;
    std::uint32_t layer = 0;
    for (vertex u : bfs.order) {
      if (found && bfs.dist[u] > layer)
        break;
      if (bfs.dist[u] == 0)
        continue;
      for (vertex w : g.neighbors(u)) {
        if (u < w && bfs.dist[w] == bfs.dist[u] && (!found || edge{u, w} < *found)) {
          found = edge{u, w};
          layer = bfs.dist[u];
        }
      }
    }
    if (!found)
      continue;
    odd_cycle_certificate cert;
    cert.vertices = bfs.path_to(found->first);
    auto back = bfs.path_to(found->second);
    for (auto it = back.rbegin(); it + 1 != back.rend(); ++it)
      cert.vertices.push_back(*it);
    best = std::move(cert);
  }
  return best;
}

std::optional<sphere_violation> check_sphere_independence(const graph &g,
                                                          std::uint32_t k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2, got " +
                                std::to_string(k));
  detail::bfs_state bfs(g.vertex_count());
  for (vertex v = 0; v < g.vertex_count(); ++v)
    if (auto viol = scan_center(g, v, k, bfs))
      return viol;
  return std::nullopt;
}

std::optional<sphere_violation>
check_sphere_independence_at(const graph &g, vertex center, std::uint32_t k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2, got " +
                                std::to_string(k));
  if (center >= g.vertex_count())
    throw std::out_of_range("center out of range");
  detail::bfs_state bfs(g.vertex_count());
  return scan_center(g, center, k, bfs);
}

void require_sphere_independence(const graph &g, std::uint32_t k,
                                 const std::string &operation) {
  if (auto viol = check_sphere_independence(g, k))
    throw sphere_violation_error(
        *viol, operation + ": edge (" + std::to_string(viol->violating_edge.first) +
                   "," + std::to_string(viol->violating_edge.second) +
                   ") lies in the sphere of radius " +
                   std::to_string(viol->radius) + " around vertex " +
                   std::to_string(viol->center) + ", so the graph has an odd cycle of length <= " +
                   std::to_string(2 * k - 1));
}

odd_cycle_certificate expand_violation(const graph &g,
                                       const sphere_violation &violation) {
  if (violation.center >= g.vertex_count())
    throw std::out_of_range("violation center out of range");
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, violation.center, violation.radius);
  const auto [a, b] = violation.violating_edge;
  if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b) ||
      bfs.dist[a] != violation.radius || bfs.dist[b] != violation.radius)
    throw std::invalid_argument("not a sphere violation of this graph");
  odd_cycle_certificate cert;
  cert.vertices = bfs.path_to(a);
  auto back = bfs.path_to(b);
  for (auto it = back.rbegin(); it + 1 != back.rend(); ++it)
    cert.vertices.push_back(*it);
  return cert;
}

bool odd_girth_at_least(const graph &g, std::uint32_t threshold) {
  if (threshold < 3 || threshold % 2 == 0)
    throw std::invalid_argument("odd girth threshold must be odd and >= 3, got " +
                                std::to_string(threshold));
  auto c = shortest_odd_cycle(g);
  return !c || c->length() >= threshold;
}

std::optional<std::uint32_t> odd_girth(const graph &g) {
  auto c = shortest_odd_cycle(g);
  if (!c)
    return std::nullopt;
  return static_cast<std::uint32_t>(c->length());
}

} // namespace oddchrom
