#ifndef ODDCHROM_CANONICAL_HPP
#define ODDCHROM_CANONICAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "oddchrom/graph.hpp"

namespace oddchrom {

/// Dense graph on at most 32 vertices; bit j of rows[i] is the edge {i, j}.
struct small_graph {
  static constexpr std::uint32_t max_order = 32;

  std::uint32_t n = 0;
  std::array<std::uint32_t, max_order> rows{};

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    return (rows[a] >> b) & 1u;
  }
  void add_edge(std::uint32_t a, std::uint32_t b) {
    rows[a] |= 1u << b;
    rows[b] |= 1u << a;
  }
  std::uint32_t degree(std::uint32_t a) const;

  auto operator<=>(const small_graph &) const = default;
  bool operator==(const small_graph &) const = default;
};

small_graph to_small_graph(const graph &g);
graph to_graph(const small_graph &g);

/// Applies a relabeling: vertex order[i] of `g` becomes vertex i.
small_graph relabel(const small_graph &g, std::span<const std::uint8_t> order);

struct canonical_labeling {
  std::vector<std::uint8_t> order; ///< order[i] = vertex that gets label i
  small_graph form;                ///< relabel(g, order)
};

/// Canonical labeling by partition refinement and a search tree pruned with
/// the automorphisms it discovers. Two graphs (with vertex colors, when
/// given) are isomorphic iff their forms are equal. `colors` is empty or has
/// one entry per vertex; color classes are kept in ascending color order.
canonical_labeling canonical_form(const small_graph &g,
                                  std::span<const std::uint32_t> colors = {});

/// True iff some automorphism of g maps a to b.
bool same_orbit(const small_graph &g, std::uint32_t a, std::uint32_t b);

} // namespace oddchrom

#endif // ODDCHROM_CANONICAL_HPP
