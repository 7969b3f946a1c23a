#include "oddchrom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bfs.hpp"

namespace oddchrom {

namespace {

void check_vertex(const graph &g, vertex v) {
  if (v >= g.vertex_count())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range (graph has " +
                            std::to_string(g.vertex_count()) + " vertices)");
}

void check_universe(const graph &g, const vertex_set &s) {
  if (s.universe() != g.vertex_count())
    throw std::out_of_range("vertex set universe " +
                            std::to_string(s.universe()) +
                            " does not match graph order " +
                            std::to_string(g.vertex_count()));
}

} // namespace

graph::graph(std::size_t vertex_count) : adj_(vertex_count) {}

graph graph::from_edges(std::size_t n, std::span<const edge> edges) {
  graph_builder b(n);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return b.build();
}

std::span<const vertex> graph::neighbors(vertex v) const {
  check_vertex(*this, v);
  return adj_[v];
}

bool graph::adjacent(vertex u, vertex v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<edge> graph::edges() const {
  std::vector<edge> out;
  out.reserve(edge_count_);
  for (vertex u = 0; u < adj_.size(); ++u)
    for (vertex v : adj_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

graph_builder::graph_builder(std::size_t vertex_count) : adj_(vertex_count) {}

bool graph_builder::has_edge(vertex u, vertex v) const {
  if (u >= adj_.size() || v >= adj_.size())
    return false;
  const auto &a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const vertex other = &a == &adj_[u] ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

graph_builder &graph_builder::add_edge(vertex u, vertex v) {
  if (u >= adj_.size() || v >= adj_.size())
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") has an endpoint >= " +
                                std::to_string(adj_.size()));
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  return *this;
}

graph graph_builder::build() const {
  graph g;
  g.adj_ = adj_;
  std::size_t total = 0;
  for (auto &nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    total += nbrs.size();
  }
  g.edge_count_ = total / 2;
  return g;
}

vertex_set vertex_set::all(std::size_t universe) {
  vertex_set s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.size_ = universe;
  return s;
}

vertex_set vertex_set::of(std::size_t universe,
                          std::span<const vertex> members) {
  vertex_set s(universe);
  for (vertex v : members)
    s.insert(v);
  return s;
}

void vertex_set::insert(vertex v) {
  if (v >= bits_.size())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside set universe " +
                            std::to_string(bits_.size()));
  if (!bits_[v]) {
    bits_[v] = 1;
    ++size_;
  }
}

void vertex_set::erase(vertex v) {
  if (v < bits_.size() && bits_[v]) {
    bits_[v] = 0;
    --size_;
  }
}

bool vertex_set::is_subset_of(const vertex_set &other) const {
  for (vertex v : *this)
    if (!other.contains(v))
      return false;
  return true;
}

bool is_valid_certificate(const graph &g, const odd_cycle_certificate &cert) {
  const auto len = cert.length();
  if (len < 3 || len % 2 == 0)
    return false;
  for (std::size_t i = 0; i < len; ++i) {
    const vertex a = cert.vertices[i];
    const vertex b = cert.vertices[(i + 1) % len];
    if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b))
      return false;
  }
  return true;
}

std::vector<distance> distances_from(const graph &g, vertex v) {
  check_vertex(g, v);
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, v);
  std::vector<distance> out(g.vertex_count());
  for (vertex u : bfs.order)
    out[u] = bfs.dist[u];
  return out;
}

vertex_set ball(const graph &g, vertex v, std::uint32_t radius) {
  check_vertex(g, v);
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, v, radius);
  vertex_set s(g.vertex_count());
  for (vertex u : bfs.order)
    s.insert(u);
  return s;
}

vertex_set sphere(const graph &g, vertex v, std::uint32_t radius) {
  check_vertex(g, v);
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, v, radius);
  vertex_set s(g.vertex_count());
  for (vertex u : bfs.order)
    if (bfs.dist[u] == radius)
      s.insert(u);
  return s;
}

vertex_set outer_boundary(const graph &g, const vertex_set &s) {
  check_universe(g, s);
  vertex_set out(g.vertex_count());
  for (vertex v : s)
    for (vertex u : g.neighbors(v))
      if (!s.contains(u))
        out.insert(u);
  return out;
}

induced_graph induced_subgraph(const graph &g, const vertex_set &s) {
  check_universe(g, s);
  induced_graph r;
  r.old_to_new.assign(g.vertex_count(), std::nullopt);
  for (vertex v : s) {
    r.old_to_new[v] = static_cast<vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  graph_builder b(r.new_to_old.size());
  for (vertex v : s)
    for (vertex u : g.neighbors(v))
      if (v < u && s.contains(u))
        b.add_edge(*r.old_to_new[v], *r.old_to_new[u]);
  r.subgraph = b.build();
  return r;
}

bool is_connected(const graph &g) {
  if (g.vertex_count() <= 1)
    return true;
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, 0);
  return bfs.order.size() == g.vertex_count();
}

std::variant<coloring, odd_cycle_certificate>
bipartite_2_coloring(const graph &g) {
  const auto n = g.vertex_count();
  coloring c;
  c.assignment.assign(n, 0);
  c.num_colors = n == 0 ? 0 : (g.edge_count() == 0 ? 1 : 2);

  std::vector<char> seen(n, 0);
  detail::bfs_state bfs(n);
  for (vertex root = 0; root < n; ++root) {
    if (seen[root])
      continue;
    bfs.run(g, root);
    for (vertex u : bfs.order) {
      seen[u] = 1;
      c.assignment[u] = bfs.dist[u] % 2;
    }
    for (vertex u : bfs.order) {
      for (vertex w : g.neighbors(u)) {
        if (u >= w || bfs.dist[u] != bfs.dist[w])
          continue;
        // Same BFS layer: join both tree paths at their meeting point.
        auto pu = bfs.path_to(u);
        auto pw = bfs.path_to(w);
        std::size_t common = 0;
        while (common < pu.size() && common < pw.size() &&
               pu[common] == pw[common])
          ++common;
        odd_cycle_certificate cert;
        cert.vertices.assign(pu.begin() + static_cast<std::ptrdiff_t>(common) - 1,
                             pu.end());
        for (auto it = pw.rbegin();
             it != pw.rend() - static_cast<std::ptrdiff_t>(common); ++it)
          cert.vertices.push_back(*it);
        return cert;
      }
    }
  }
  return c;
}

} // namespace oddchrom
