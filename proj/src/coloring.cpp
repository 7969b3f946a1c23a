#include "oddchrom/coloring.hpp"

#include <algorithm>
#include <limits>

#include "bfs.hpp"
#include "oddchrom/oddgirth.hpp"

namespace oddchrom {

std::optional<edge> verify_coloring(const graph &g, const coloring &c) {
  if (c.assignment.size() != g.vertex_count())
    throw std::invalid_argument("coloring has " +
                                std::to_string(c.assignment.size()) +
                                " entries for a graph on " +
                                std::to_string(g.vertex_count()) + " vertices");
  for (vertex v = 0; v < c.assignment.size(); ++v)
    if (c.assignment[v] >= c.num_colors)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(c.assignment[v]) +
                                  " but only " + std::to_string(c.num_colors) +
                                  " colors are declared");
  for (auto e : g.edges())
    if (c.assignment[e.first] == c.assignment[e.second])
      return e;
  return std::nullopt;
}

coloring layer_2_coloring(const graph &g, vertex v, std::uint32_t k) {
  using err = coloring_precondition_error;
  require_sphere_independence(g, k, "layer_2_coloring");
  if (v >= g.vertex_count())
    throw std::out_of_range("vertex out of range");
  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, v);
  if (bfs.order.size() != g.vertex_count())
    throw err(err::reason::unreachable_vertex,
              "layer_2_coloring: some vertex is unreachable from " +
                  std::to_string(v));
  std::uint32_t ecc = bfs.dist[bfs.order.back()];
  if (ecc > k - 1)
    throw err(err::reason::eccentricity_too_large,
              "layer_2_coloring: eccentricity of " + std::to_string(v) +
                  " is " + std::to_string(ecc) + " > k-1 = " +
                  std::to_string(k - 1));
  coloring c;
  c.num_colors = g.vertex_count() > 1 ? 2 : 1;
  c.assignment.resize(g.vertex_count());
  for (vertex u = 0; u < g.vertex_count(); ++u)
    c.assignment[u] = bfs.dist[u] % 2;
  return c;
}

coloring extend_inside_ball(const graph &g, vertex v, std::uint32_t r,
                            const coloring &outside, color_t n,
                            std::uint32_t k) {
  using err = coloring_precondition_error;
  require_sphere_independence(g, k, "extend_inside_ball");
  if (v >= g.vertex_count())
    throw std::out_of_range("vertex out of range");
  if (r < 1 || r > k - 1)
    throw err(err::reason::radius_out_of_range,
              "extend_inside_ball: radius must lie in [1, k-1]");
  if (outside.assignment.size() != g.vertex_count())
    throw std::invalid_argument("extend_inside_ball: coloring size mismatch");

  detail::bfs_state bfs(g.vertex_count());
  bfs.run(g, v, r);
  auto inside = [&](vertex u) { return bfs.dist[u] < r; };

  for (vertex u = 0; u < g.vertex_count(); ++u)
    if (!inside(u) && outside.assignment[u] >= n)
      throw err(err::reason::color_out_of_range,
                "extend_inside_ball: vertex " + std::to_string(u) +
                    " has a color >= n");
  for (auto [a, b] : g.edges())
    if (!inside(a) && !inside(b) &&
        outside.assignment[a] == outside.assignment[b])
      throw err(err::reason::improper_outside,
                "extend_inside_ball: outside coloring is improper on edge (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");

  std::vector<char> used(n, 0);
  for (vertex u : bfs.order)
    if (bfs.dist[u] == r)
      used[outside.assignment[u]] = 1;
  const auto free_it = std::find(used.begin(), used.end(), 0);
  if (free_it == used.end())
    throw err(err::reason::no_free_color,
              "extend_inside_ball: the sphere of radius " + std::to_string(r) +
                  " uses all " + std::to_string(n) + " colors");
  const auto primary = static_cast<color_t>(free_it - used.begin());
  const color_t secondary = primary == 0 ? 1 : 0;
  if (r >= 2 && n < 2)
    throw err(err::reason::no_free_color,
              "extend_inside_ball: alternation needs at least two colors");

  coloring c = outside;
  c.num_colors = n;
  for (vertex u : bfs.order)
    if (inside(u))
      c.assignment[u] = (r - 1 - bfs.dist[u]) % 2 == 0 ? primary : secondary;
  return c;
}

namespace {

using failure = carve_coloring_failure;

std::variant<coloring, failure>
carve_color_level(const graph &g, const std::vector<vertex> &to_input,
                  std::size_t input_order, color_t n, std::uint32_t k,
                  std::uint32_t level, const carve_coloring_options &opts) {
  auto fail = [&](std::string reason) {
    failure f;
    f.level = level;
    f.residual = vertex_set(input_order);
    for (vertex u : to_input)
      f.residual.insert(u);
    f.colors_available = n;
    f.reason = std::move(reason);
    return f;
  };

  coloring c;
  c.num_colors = n;
  c.assignment.assign(g.vertex_count(), 0);
  if (g.empty())
    return c;
  if (n == 0)
    return fail("no colors left for a nonempty subgraph");
  if (n == 1) {
    if (g.edge_count() != 0)
      return fail("one color left but the subgraph has edges");
    return c;
  }
  if (n == 2) {
    auto two = bipartite_2_coloring(g);
    if (auto *col = std::get_if<coloring>(&two)) {
      col->num_colors = 2;
      return *col;
    }
    return fail("two colors left but the subgraph has an odd cycle");
  }

  const auto parts = opts.order_threshold ? carve_order_threshold(g, k, opts.rule)
                                          : carve(g, k, opts.rule);
  const auto sub = induced_subgraph(g, parts.boundary);
  std::vector<vertex> sub_to_input(sub.new_to_old.size());
  for (std::size_t i = 0; i < sub.new_to_old.size(); ++i)
    sub_to_input[i] = to_input[sub.new_to_old[i]];
  auto inner = carve_color_level(sub.subgraph, sub_to_input, input_order,
                                 n - 2, k, level + 1, opts);
  if (auto *f = std::get_if<failure>(&inner))
    return std::move(*f);
  const auto &inner_col = std::get<coloring>(inner);
  for (std::size_t i = 0; i < sub.new_to_old.size(); ++i)
    c.assignment[sub.new_to_old[i]] = inner_col.assignment[i];

  for (const auto &b : parts.balls) {
    const auto piece = induced_subgraph(g, b);
    auto two = bipartite_2_coloring(piece.subgraph);
    const auto *col = std::get_if<coloring>(&two);
    if (!col)
      throw std::logic_error("carved ball is not bipartite");
    for (std::size_t i = 0; i < piece.new_to_old.size(); ++i)
      c.assignment[piece.new_to_old[i]] = n - 2 + col->assignment[i];
  }
  return c;
}

/// DSATUR backtracking state for a fixed palette size.
class dsatur_search {
public:
  dsatur_search(const graph &g, color_t colors, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), colors_(colors), budget_(budget),
        color_(n_, none), counts_(n_ * colors, 0), sat_(n_, 0) {}

  coloring_search run() {
    coloring_search out;
    if (n_ == 0) {
      out.status = search_status::found;
      out.witness = coloring{{}, 0};
      return out;
    }
    if (colors_ == 0) {
      out.status = search_status::infeasible;
      return out;
    }
    const bool ok = descend(0, 0);
    out.nodes = nodes_;
    if (ok) {
      out.status = search_status::found;
      coloring c;
      c.assignment = color_;
      c.num_colors = *std::max_element(color_.begin(), color_.end()) + 1;
      out.witness = std::move(c);
    } else {
      out.status = exhausted_ ? search_status::budget_exceeded
                              : search_status::infeasible;
    }
    return out;
  }

private:
  static constexpr color_t none = std::numeric_limits<color_t>::max();

  vertex pick() const {
    vertex best = 0;
    bool have = false;
    for (vertex v = 0; v < n_; ++v) {
      if (color_[v] != none)
        continue;
      if (!have || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  void assign(vertex v, color_t c) {
    color_[v] = c;
    for (vertex w : g_.neighbors(v))
      if (counts_[w * colors_ + c]++ == 0)
        ++sat_[w];
  }

  void unassign(vertex v) {
    const color_t c = color_[v];
    color_[v] = none;
    for (vertex w : g_.neighbors(v))
      if (--counts_[w * colors_ + c] == 0)
        --sat_[w];
  }

  bool descend(std::size_t colored, color_t used) {
    if (colored == n_)
      return true;
    const vertex v = pick();
    if (sat_[v] >= colors_)
      return false;
    const color_t limit = std::min<color_t>(used + 1, colors_);
    for (color_t c = 0; c < limit; ++c) {
      if (counts_[v * colors_ + c] != 0)
        continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      assign(v, c);
      if (descend(colored + 1, std::max<color_t>(used, c + 1)))
        return true;
      unassign(v);
      if (exhausted_)
        return false;
    }
    return false;
  }

  const graph &g_;
  std::size_t n_;
  color_t colors_;
  std::uint64_t budget_;
  std::vector<color_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> sat_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

} // namespace

std::variant<coloring, carve_coloring_failure>
recursive_carve_coloring(const graph &g, color_t n, std::uint32_t k,
                         carve_coloring_options options) {
  if (n < 1)
    throw std::invalid_argument("recursive_carve_coloring needs n >= 1");
  require_sphere_independence(g, k, "recursive_carve_coloring");
  std::vector<vertex> identity(g.vertex_count());
  for (vertex v = 0; v < identity.size(); ++v)
    identity[v] = v;
  return carve_color_level(g, identity, g.vertex_count(), n, k, 0, options);
}

coloring_search find_coloring(const graph &g, color_t colors,
                              std::uint64_t budget) {
  return dsatur_search(g, colors, budget).run();
}

chromatic_result exact_chromatic(const graph &g, std::uint64_t budget) {
  chromatic_result out;
  const auto n = g.vertex_count();
  if (n == 0)
    return out;
  if (g.edge_count() == 0) {
    out.lower = out.upper = 1;
    out.witness = {std::vector<color_t>(n, 0), 1};
    return out;
  }
  auto two = bipartite_2_coloring(g);
  if (auto *col = std::get_if<coloring>(&two)) {
    out.lower = out.upper = 2;
    out.witness = *col;
    return out;
  }
  out.lower = 3;

  // With max degree + 1 colors DSATUR never backtracks: this is the greedy
  // upper bound.
  std::size_t max_degree = 0;
  for (vertex v = 0; v < n; ++v)
    max_degree = std::max(max_degree, g.degree(v));
  auto greedy = find_coloring(g, static_cast<color_t>(max_degree + 1),
                              std::numeric_limits<std::uint64_t>::max());
  out.nodes = greedy.nodes;
  out.witness = *greedy.witness;
  out.upper = out.witness.num_colors;

  while (out.upper > out.lower) {
    const std::uint64_t left = budget > out.nodes ? budget - out.nodes : 0;
    auto attempt = find_coloring(g, out.upper - 1, left);
    out.nodes += attempt.nodes;
    if (attempt.status == search_status::found) {
      out.witness = *attempt.witness;
      out.upper = out.witness.num_colors;
    } else if (attempt.status == search_status::infeasible) {
      out.lower = out.upper;
    } else {
      break;
    }
  }
  return out;
}

} // namespace oddchrom
