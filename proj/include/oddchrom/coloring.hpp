#ifndef ODDCHROM_COLORING_HPP
#define ODDCHROM_COLORING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "oddchrom/decomposition.hpp"
#include "oddchrom/graph.hpp"

namespace oddchrom {

inline constexpr std::uint64_t default_solver_budget = 10'000'000;

class coloring_precondition_error : public std::invalid_argument {
public:
  enum class reason {
    unreachable_vertex,
    eccentricity_too_large,
    radius_out_of_range,
    color_out_of_range,
    improper_outside,
    no_free_color,
  };

  coloring_precondition_error(reason r, const std::string &what)
      : std::invalid_argument(what), reason_(r) {}
  reason why() const { return reason_; }

private:
  reason reason_;
};

/// First monochromatic edge in ascending order, or nullopt if proper.
/// Throws std::invalid_argument when the assignment does not cover exactly the
/// vertices of g or uses a color >= num_colors.
std::optional<edge> verify_coloring(const graph &g, const coloring &c);

/// Colors by parity of the distance from v. Needs every sphere of radius < k
/// independent and every vertex within distance k-1 of v.
coloring layer_2_coloring(const graph &g, vertex v, std::uint32_t k);

/// Recolors U_{r-1}(v): the sphere S_{r-1} gets a color missing from S_r
/// under `outside`, inner spheres alternate it with a second color. Entries
/// of `outside` inside U_{r-1}(v) are ignored; the rest must be a proper
/// coloring with colors < n. Requires 1 <= r <= k-1.
coloring extend_inside_ball(const graph &g, vertex v, std::uint32_t r,
                            const coloring &outside, color_t n,
                            std::uint32_t k);

struct carve_coloring_options {
  center_rule rule = center_rule::first;
  bool order_threshold = false; ///< carve with |V|^(1/k) instead of d^(1/(k-1))
};

struct carve_coloring_failure {
  std::uint32_t level = 0;
  vertex_set residual; ///< in the input graph's vertex indices
  color_t colors_available = 0;
  std::string reason;
};

/// Colors the carve boundary recursively with colors 0..n-3 and each ball
/// with n-2 and n-1. Sound but incomplete: a failure does not mean g needs
/// more than n colors.
std::variant<coloring, carve_coloring_failure>
recursive_carve_coloring(const graph &g, color_t n, std::uint32_t k,
                         carve_coloring_options options = {});

enum class search_status { found, infeasible, budget_exceeded };

struct coloring_search {
  search_status status = search_status::infeasible;
  std::optional<coloring> witness;
  std::uint64_t nodes = 0;
};

/// DSATUR backtracking for a coloring with at most `colors` colors. Every
/// color assignment counts as one node against `budget`.
coloring_search find_coloring(const graph &g, color_t colors,
                              std::uint64_t budget = default_solver_budget);

struct chromatic_result {
  std::uint32_t lower = 0;
  std::uint32_t upper = 0;
  coloring witness; ///< proper coloring with `upper` colors
  std::uint64_t nodes = 0;

  bool exact() const { return lower == upper; }
};

/// Branch and bound over DSATUR. If the budget runs out the result brackets
/// the chromatic number as [lower, upper] with exact() false.
chromatic_result exact_chromatic(const graph &g,
                                 std::uint64_t budget = default_solver_budget);

} // namespace oddchrom

#endif // ODDCHROM_COLORING_HPP
