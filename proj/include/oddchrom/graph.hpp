#ifndef ODDCHROM_GRAPH_HPP
#define ODDCHROM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace oddchrom {

using vertex = std::uint32_t;
using color_t = std::uint32_t;
using edge = std::pair<vertex, vertex>;

/// Undirected simple graph with sorted adjacency lists. Frozen after
/// construction; use graph_builder or graph::from_edges to make one.
class graph {
public:
  graph() = default;
  explicit graph(std::size_t vertex_count);

  /// Throws std::invalid_argument on self-loops, duplicates (in either
  /// orientation) and endpoints >= n.
  static graph from_edges(std::size_t n, std::span<const edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return adj_.empty(); }

  std::span<const vertex> neighbors(vertex v) const;
  std::size_t degree(vertex v) const { return neighbors(v).size(); }
  bool adjacent(vertex u, vertex v) const;

  /// All edges as (u, v) with u < v, ascending lexicographically.
  std::vector<edge> edges() const;

  bool operator==(const graph &) const = default;

private:
  friend class graph_builder;

  std::vector<std::vector<vertex>> adj_;
  std::size_t edge_count_ = 0;
};

class graph_builder {
public:
  explicit graph_builder(std::size_t vertex_count);

  /// Throws std::invalid_argument on a self-loop, an out-of-range endpoint or
  /// an edge already present.
  graph_builder &add_edge(vertex u, vertex v);
  bool has_edge(vertex u, vertex v) const;
  std::size_t vertex_count() const { return adj_.size(); }

  graph build() const;

private:
  std::vector<std::vector<vertex>> adj_;
};

/// Subset of 0..universe-1. Iteration is in ascending vertex order.
class vertex_set {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const vertex *;
    using reference = vertex;

    iterator() = default;
    vertex operator*() const { return static_cast<vertex>(pos_); }
    iterator &operator++() {
      ++pos_;
      skip();
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator &o) const { return pos_ == o.pos_; }

  private:
    friend class vertex_set;
    iterator(const std::vector<char> *bits, std::size_t pos)
        : bits_(bits), pos_(pos) {
      skip();
    }
    void skip() {
      while (pos_ < bits_->size() && !(*bits_)[pos_])
        ++pos_;
    }
    const std::vector<char> *bits_ = nullptr;
    std::size_t pos_ = 0;
  };

  vertex_set() = default;
  explicit vertex_set(std::size_t universe) : bits_(universe, 0) {}

  static vertex_set all(std::size_t universe);
  /// Throws std::out_of_range if a member is >= universe.
  static vertex_set of(std::size_t universe, std::span<const vertex> members);
  static vertex_set of(std::size_t universe,
                       std::initializer_list<vertex> members) {
    return of(universe, std::span<const vertex>(members.begin(), members.size()));
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(vertex v) const { return v < bits_.size() && bits_[v]; }

  void insert(vertex v);
  void erase(vertex v);

  bool is_subset_of(const vertex_set &other) const;
  std::vector<vertex> members() const { return {begin(), end()}; }

  iterator begin() const { return {&bits_, 0}; }
  iterator end() const { return {&bits_, bits_.size()}; }

  bool operator==(const vertex_set &) const = default;

private:
  std::vector<char> bits_;
  std::size_t size_ = 0;
};

struct coloring {
  std::vector<color_t> assignment;
  color_t num_colors = 0;

  bool operator==(const coloring &) const = default;
};

/// Closed walk of odd length; consecutive vertices (cyclically) adjacent.
struct odd_cycle_certificate {
  std::vector<vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const odd_cycle_certificate &) const = default;
};

/// True iff `cert` is a closed walk in `g` of odd length >= 3.
bool is_valid_certificate(const graph &g, const odd_cycle_certificate &cert);

using distance = std::optional<std::uint32_t>;

/// BFS distances from `v`; std::nullopt marks unreachable vertices.
std::vector<distance> distances_from(const graph &g, vertex v);

vertex_set ball(const graph &g, vertex v, std::uint32_t radius);
vertex_set sphere(const graph &g, vertex v, std::uint32_t radius);
vertex_set outer_boundary(const graph &g, const vertex_set &s);

struct induced_graph {
  graph subgraph;
  std::vector<std::optional<vertex>> old_to_new;
  std::vector<vertex> new_to_old;
};

induced_graph induced_subgraph(const graph &g, const vertex_set &s);

bool is_connected(const graph &g);

/// Proper coloring with at most two colors, or an odd cycle. Uses zero
/// colors on the empty graph and one color when there are no edges.
std::variant<coloring, odd_cycle_certificate>
bipartite_2_coloring(const graph &g);

} // namespace oddchrom

#endif // ODDCHROM_GRAPH_HPP
