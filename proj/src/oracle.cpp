#include "oddchrom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "oddchrom/oddgirth.hpp"

namespace oddchrom {

namespace {

/// Bitmask of vertices within distance `radius` of v.
std::uint32_t ball_mask(const small_graph &g, std::uint32_t v,
                        std::uint32_t radius) {
  std::uint32_t seen = 1u << v, frontier = seen;
  for (std::uint32_t r = 0; r < radius && frontier; ++r) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= g.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool connected(const small_graph &g) {
  if (g.n <= 1)
    return true;
  const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
  return ball_mask(g, 0, g.n) == all;
}

/// True if some sphere of radius 1..max_radius around v spans an edge, i.e.
/// v lies on an odd closed walk of length <= 2*max_radius+1.
bool short_odd_cycle_at(const small_graph &g, std::uint32_t v,
                        std::uint32_t max_radius) {
  std::uint32_t seen = 1u << v, frontier = seen;
  for (std::uint32_t r = 1; r <= max_radius; ++r) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      next |= g.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    if (!frontier)
      return false;
    for (std::uint32_t f = frontier; f; f &= f - 1)
      if (g.rows[std::countr_zero(f)] & frontier)
        return true;
    seen |= frontier;
  }
  return false;
}

std::uint32_t deletion_key(const small_graph &g, std::uint32_t v) {
  std::uint32_t sum = 0;
  for (std::uint32_t r = g.rows[v]; r; r &= r - 1)
    sum += g.degree(static_cast<std::uint32_t>(std::countr_zero(r)));
  return g.degree(v) * 1024 + sum;
}

/// Children of one parent in canonical form. A child is kept only when the
/// new vertex is equivalent to the canonical deletion vertex: the vertex of
/// maximal deletion_key placed last by the canonical labeling.
std::vector<small_graph> augment(const small_graph &parent,
                                 std::uint32_t odd_girth_min) {
  const std::uint32_t m = parent.n;
  const std::uint32_t x = m;
  const std::uint32_t max_radius = (odd_girth_min - 1) / 2 - 1;
  std::set<small_graph> seen;
  std::vector<small_graph> out;

  for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
    small_graph child = parent;
    child.n = m + 1;
    const auto subset = static_cast<std::uint32_t>(s);
    for (std::uint32_t b = subset; b; b &= b - 1)
      child.add_edge(x, static_cast<std::uint32_t>(std::countr_zero(b)));
    if (max_radius >= 1 && short_odd_cycle_at(child, x, max_radius))
      continue;

    const std::uint32_t key_x = deletion_key(child, x);
    std::uint32_t ties = 0;
    bool beaten = false;
    for (std::uint32_t u = 0; u < m && !beaten; ++u) {
      const auto key = deletion_key(child, u);
      beaten = key > key_x;
      ties += key == key_x;
    }
    if (beaten)
      continue;

    auto canon = canonical_form(child);
    if (ties > 0) {
      std::uint32_t chosen = x;
      for (auto it = canon.order.rbegin(); it != canon.order.rend(); ++it)
        if (deletion_key(child, *it) == key_x) {
          chosen = *it;
          break;
        }
      if (chosen != x && !same_orbit(child, x, chosen))
        continue;
    }
    if (seen.insert(canon.form).second)
      out.push_back(canon.form);
  }
  return out;
}

void check_cap(std::uint32_t v, std::uint32_t cap) {
  const auto limit = std::min(cap, hard_oracle_cap);
  if (v > limit)
    throw std::length_error("requested " + std::to_string(v) +
                            " vertices; the enumeration cap is " +
                            std::to_string(limit));
}

} // namespace

graph_enumerator::graph_enumerator(std::uint32_t odd_girth_min, unsigned jobs)
    : odd_girth_min_(odd_girth_min), jobs_(std::max(1u, jobs)),
      level_{small_graph{}} {
  if (odd_girth_min < 3 || odd_girth_min % 2 == 0)
    throw std::invalid_argument("odd girth filter must be odd and >= 3");
}

void graph_enumerator::grow() {
  if (order_ + 1 > small_graph::max_order - 1)
    throw std::length_error("enumeration beyond 31 vertices");
  std::vector<std::vector<small_graph>> per_parent(level_.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      per_parent[i] = augment(level_[i], odd_girth_min_);
  };
  const std::size_t workers =
      std::min<std::size_t>(jobs_, std::max<std::size_t>(1, level_.size()));
  if (workers <= 1) {
    work(0, level_.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (level_.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = w * chunk, e = std::min(level_.size(), b + chunk);
      if (b < e)
        threads.emplace_back(work, b, e);
    }
    for (auto &t : threads)
      t.join();
  }
  std::vector<small_graph> next;
  for (auto &children : per_parent)
    next.insert(next.end(), children.begin(), children.end());
  level_ = std::move(next);
  ++order_;
}

void enumerate_graphs(std::uint32_t v, const enumeration_filters &filters,
                      const std::function<void(const graph &)> &yield,
                      enumeration_options options) {
  check_cap(v, options.cap);
  graph_enumerator e(filters.odd_girth_min, options.jobs);
  while (e.order() < v)
    e.grow();
  for (const auto &sg : e.current()) {
    if (filters.connected && !connected(sg))
      continue;
    bool degree_ok = true;
    for (std::uint32_t u = 0; u < sg.n && degree_ok; ++u)
      degree_ok = sg.degree(u) >= filters.min_degree;
    if (!degree_ok)
      continue;
    yield(to_graph(sg));
  }
}

std::vector<graph> enumerate_graphs(std::uint32_t v,
                                    const enumeration_filters &filters,
                                    enumeration_options options) {
  std::vector<graph> out;
  enumerate_graphs(
      v, filters, [&](const graph &g) { out.push_back(g); }, options);
  return out;
}

std::optional<vertex> check_ball_size_condition(const graph &g, std::uint32_t n,
                                   std::uint32_t k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  const std::size_t need = std::size_t(n) * (k - 1) + 1;
  for (vertex v = 0; v < g.vertex_count(); ++v)
    if (ball(g, v, k - 1).size() < need)
      return v;
  return std::nullopt;
}

oracle_result exact_f(std::uint32_t n, std::uint32_t k, std::uint32_t v_max,
                      oracle_options options) {
  if (n < 1)
    throw std::invalid_argument("n must be at least 1");
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  check_cap(v_max, options.cap);

  oracle_result out;
  out.n = n;
  out.k = k;
  const std::uint32_t need = n * (k - 1) + 1;
  graph_enumerator e(2 * k + 1, options.jobs);
  while (e.order() < v_max) {
    e.grow();
    const std::uint32_t v = e.order();
    out.vertices_searched = v;
    for (const auto &sg : e.current()) {
      if (options.prunes.connected && !connected(sg))
        continue;
      if (options.prunes.min_degree) {
        bool ok = true;
        for (std::uint32_t u = 0; u < v && ok; ++u)
          ok = sg.degree(u) >= n;
        if (!ok)
          continue;
      }
      // The ball-size bound needs a second color; for n = 1 the minimal
      // counterexample is K2.
      if (options.prunes.ball_size && n >= 2) {
        bool ok = true;
        for (std::uint32_t u = 0; u < v && ok; ++u)
          ok = static_cast<std::uint32_t>(
                   std::popcount(ball_mask(sg, u, k - 1))) >= need;
        if (!ok)
          continue;
      }
      ++out.graphs_tested;
      const graph g = to_graph(sg);
      const auto search = find_coloring(g, n, options.coloring_budget);
      if (search.status == search_status::budget_exceeded)
        throw std::runtime_error("coloring budget exhausted on a " +
                                 std::to_string(v) + "-vertex candidate");
      if (search.status == search_status::infeasible) {
        out.status = oracle_status::exact;
        out.value = v - 1;
        out.witness = g;
        out.certificate = oracle_certificate{odd_girth(g), search.nodes};
        return out;
      }
    }
  }
  out.status = oracle_status::lower_bound_only;
  out.value = v_max;
  return out;
}

} // namespace oddchrom
