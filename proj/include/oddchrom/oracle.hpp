#ifndef ODDCHROM_ORACLE_HPP
#define ODDCHROM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oddchrom/canonical.hpp"
#include "oddchrom/coloring.hpp"
#include "oddchrom/graph.hpp"

namespace oddchrom {

inline constexpr std::uint32_t default_oracle_cap = 10;
inline constexpr std::uint32_t hard_oracle_cap = 16;

struct enumeration_filters {
  /// Every odd cycle has length >= this (odd, >= 3; 3 means no constraint).
  std::uint32_t odd_girth_min = 3;
  std::uint32_t min_degree = 0;
  bool connected = false;
};

struct enumeration_options {
  std::uint32_t cap = default_oracle_cap;
  unsigned jobs = 1;
};

/// Isomorph-free generation by canonical vertex augmentation. Each level
/// holds one canonical representative per isomorphism class of graphs on
/// that many vertices with odd girth >= the filter threshold (a hereditary
/// property, so every such graph is reached from one on one vertex fewer).
class graph_enumerator {
public:
  explicit graph_enumerator(std::uint32_t odd_girth_min, unsigned jobs = 1);

  /// Graphs on `order()` vertices.
  const std::vector<small_graph> &current() const { return level_; }
  std::uint32_t order() const { return order_; }

  /// Advances to order()+1 vertices.
  void grow();

private:
  std::uint32_t odd_girth_min_;
  unsigned jobs_;
  std::uint32_t order_ = 0;
  std::vector<small_graph> level_;
};

/// All isomorphism classes on `v` vertices passing the filters, in a
/// deterministic order. Throws std::length_error when v exceeds the cap.
void enumerate_graphs(std::uint32_t v, const enumeration_filters &filters,
                      const std::function<void(const graph &)> &yield,
                      enumeration_options options = {});
std::vector<graph> enumerate_graphs(std::uint32_t v,
                                    const enumeration_filters &filters,
                                    enumeration_options options = {});

/// First vertex whose (k-1)-ball has fewer than n(k-1)+1 vertices. Minimal
/// graphs of odd girth >= 2k+1 that are not n-colorable pass for n >= 2.
std::optional<vertex> check_ball_size_condition(const graph &g, std::uint32_t n,
                                   std::uint32_t k);

struct oracle_prunes {
  bool connected = true;
  bool min_degree = true; ///< minimum degree >= n
  bool ball_size = true;  ///< every (k-1)-ball has >= n(k-1)+1 vertices (n >= 2)
};

struct oracle_options {
  std::uint32_t cap = default_oracle_cap;
  unsigned jobs = 1;
  oracle_prunes prunes;
  std::uint64_t coloring_budget = default_solver_budget;
};

enum class oracle_status { exact, lower_bound_only };

struct oracle_certificate {
  std::optional<std::uint32_t> odd_girth; ///< of the witness; nullopt if bipartite
  std::uint64_t coloring_nodes = 0; ///< nodes of the exhaustive n-coloring search
};

struct oracle_result {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  oracle_status status = oracle_status::lower_bound_only;
  /// exact f(n,k), or a certified f(n,k) >= value
  std::uint32_t value = 0;
  std::optional<graph> witness;
  std::optional<oracle_certificate> certificate;
  std::uint32_t vertices_searched = 0;
  std::uint64_t graphs_tested = 0;
};

/// Smallest graph with odd girth >= 2k+1 that is not n-colorable, searched up
/// to v_max vertices. Throws std::length_error if v_max exceeds options.cap
/// and std::runtime_error if a coloring search runs out of budget.
oracle_result exact_f(std::uint32_t n, std::uint32_t k, std::uint32_t v_max,
                      oracle_options options = {});

} // namespace oddchrom

#endif // ODDCHROM_ORACLE_HPP
