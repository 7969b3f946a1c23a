#include "oddchrom/decomposition.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "bfs.hpp"
#include "oddchrom/oddgirth.hpp"

namespace oddchrom {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

double carve_threshold::value() const {
  return std::pow(base.convert_to<double>(), 1.0 / exponent);
}

std::size_t compute_d(const graph &g, std::uint32_t k) {
  if (g.empty())
    throw std::invalid_argument("compute_d needs a nonempty graph");
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  detail::bfs_state bfs(g.vertex_count());
  std::size_t d = 0;
  for (vertex v = 0; v < g.vertex_count(); ++v) {
    bfs.run(g, v, k - 1);
    d = std::max(d, bfs.order.size());
  }
  return d;
}

namespace {

carve_result carve_impl(const graph &g, std::uint32_t k, center_rule rule,
                        std::uint32_t max_radius, carve_threshold threshold) {
  const auto n = g.vertex_count();
  carve_result out;
  out.boundary = vertex_set(n);
  out.threshold = threshold;
  const double t_value = threshold.value();

  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  vertex first_alive = 0;
  detail::bfs_state bfs(n);
  std::vector<std::size_t> layer_count;

  while (remaining > 0) {
    while (!alive[first_alive])
      ++first_alive;
    vertex center = first_alive;
    if (rule == center_rule::min_ball) {
      std::size_t best = SIZE_MAX;
      for (vertex u = first_alive; u < n; ++u) {
        if (!alive[u])
          continue;
        bfs.run(g, u, k - 1, &alive);
        if (bfs.order.size() < best) {
          best = bfs.order.size();
          center = u;
        }
      }
    }

    bfs.run(g, center, max_radius, &alive);
    layer_count.assign(max_radius + 1, 0);
    for (vertex u : bfs.order)
      ++layer_count[bfs.dist[u]];
    // cumulative ball sizes |U_r|
    for (std::uint32_t r = 1; r <= max_radius; ++r)
      layer_count[r] += layer_count[r - 1];

    std::uint32_t m = 0;
    for (std::uint32_t r = 1; r <= max_radius; ++r) {
      const cpp_int outer = pow(cpp_int(layer_count[r]), threshold.exponent);
      const cpp_int inner = pow(cpp_int(layer_count[r - 1]), threshold.exponent);
      if (outer <= threshold.base * inner) {
        m = r;
        break;
      }
    }
    if (m == 0)
      throw std::logic_error("no ball ratio below the carving threshold");

    vertex_set piece(n);
    for (vertex u : bfs.order) {
      if (bfs.dist[u] > m)
        break;
      if (bfs.dist[u] < m)
        piece.insert(u);
      else
        out.boundary.insert(u);
      alive[u] = 0;
      --remaining;
    }
    out.balls.push_back(std::move(piece));
    out.trace.push_back({center, m - 1, t_value, layer_count[m - 1],
                         layer_count[m]});
  }
  return out;
}

} // namespace

carve_result carve(const graph &g, std::uint32_t k, center_rule rule) {
  require_sphere_independence(g, k, "carve");
  if (g.empty())
    return {{}, vertex_set(0), {}, {cpp_int(1), k - 1}};
  return carve_impl(g, k, rule, k - 1,
                    {cpp_int(compute_d(g, k)), k - 1});
}

carve_result carve_order_threshold(const graph &g, std::uint32_t k,
                                   center_rule rule) {
  require_sphere_independence(g, k, "carve_order_threshold");
  if (g.empty())
    return {{}, vertex_set(0), {}, {cpp_int(1), k}};
  return carve_impl(g, k, rule, k, {cpp_int(g.vertex_count()), k});
}

std::optional<std::string> verify_carve(const graph &g,
                                        const carve_result &r) {
  const auto n = g.vertex_count();
  if (r.boundary.universe() != n)
    return "boundary universe does not match the graph";
  std::vector<int> owner(n, -1);
  std::size_t covered = r.boundary.size();
  for (vertex v : r.boundary)
    owner[v] = -2;
  std::size_t piece_total = 0;
  for (std::size_t i = 0; i < r.balls.size(); ++i) {
    const auto &b = r.balls[i];
    if (b.universe() != n)
      return "ball " + std::to_string(i) + " has the wrong universe";
    for (vertex v : b) {
      if (owner[v] != -1)
        return "vertex " + std::to_string(v) + " is covered twice";
      owner[v] = static_cast<int>(i);
    }
    covered += b.size();
    piece_total += b.size();
  }
  if (covered != n)
    return "balls and boundary do not cover every vertex";

  for (std::size_t i = 0; i < r.balls.size(); ++i) {
    if (!outer_boundary(g, r.balls[i]).is_subset_of(r.boundary))
      return "outer boundary of ball " + std::to_string(i) +
             " leaves the boundary set";
    const auto sub = induced_subgraph(g, r.balls[i]);
    if (!std::holds_alternative<coloring>(bipartite_2_coloring(sub.subgraph)))
      return "ball " + std::to_string(i) + " is not bipartite";
  }
  for (auto [u, w] : g.edges())
    if (owner[u] >= 0 && owner[w] >= 0 && owner[u] != owner[w])
      return "edge (" + std::to_string(u) + "," + std::to_string(w) +
             ") joins two balls";

  // (T - 1) * S >= |N|  <=>  base * S^e >= (S + |N|)^e
  const auto e = r.threshold.exponent;
  const cpp_int lhs = r.threshold.base * pow(cpp_int(piece_total), e);
  const cpp_int rhs = pow(cpp_int(piece_total + r.boundary.size()), e);
  if (lhs < rhs)
    return "boundary exceeds (T-1) times the total ball size";

  const double t = r.threshold.value();
  if (n > 0 && static_cast<double>(r.boundary.size()) >
                   static_cast<double>(n) * (t - 1.0) / t + 1e-9)
    return "boundary exceeds |V|(T-1)/T";
  return std::nullopt;
}

} // namespace oddchrom
