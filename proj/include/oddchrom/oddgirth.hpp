#ifndef ODDCHROM_ODDGIRTH_HPP
#define ODDCHROM_ODDGIRTH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "oddchrom/graph.hpp"

namespace oddchrom {

/// Edge (a, b), a < b, with both endpoints at distance `radius` from
/// `center`.
struct sphere_violation {
  vertex center = 0;
  std::uint32_t radius = 0;
  edge violating_edge{0, 0};

  bool operator==(const sphere_violation &) const = default;
};

/// Raised when an operation requires every sphere of radius < k to be
/// independent and the graph has a short odd cycle.
class sphere_violation_error : public std::invalid_argument {
public:
  sphere_violation_error(const sphere_violation &v, const std::string &what)
      : std::invalid_argument(what), violation_(v) {}
  const sphere_violation &violation() const { return violation_; }

private:
  sphere_violation violation_;
};

/// Throws sphere_violation_error naming `operation` if g has an odd cycle of
/// length <= 2k-1.
void require_sphere_independence(const graph &g, std::uint32_t k,
                                 const std::string &operation);

/// Shortest odd cycle, or nullopt when g is bipartite. Ties are broken by the
/// smallest BFS root, so the result does not depend on evaluation order.
std::optional<odd_cycle_certificate> shortest_odd_cycle(const graph &g);

/// First violation in (center, radius, edge) ascending order among radii
/// 1..k-1, or nullopt when every such sphere is independent. Requires k >= 2.
std::optional<sphere_violation> check_sphere_independence(const graph &g,
                                                          std::uint32_t k);

/// Same scan restricted to one center.
std::optional<sphere_violation>
check_sphere_independence_at(const graph &g, vertex center, std::uint32_t k);

/// Odd closed walk of length 2*radius+1 through the violation's center.
odd_cycle_certificate expand_violation(const graph &g,
                                       const sphere_violation &violation);

/// True iff every odd cycle has length >= threshold. Threshold must be odd and
/// at least 3.
bool odd_girth_at_least(const graph &g, std::uint32_t threshold);

/// Shortest odd cycle length, nullopt for bipartite graphs.
std::optional<std::uint32_t> odd_girth(const graph &g);

} // namespace oddchrom

#endif // ODDCHROM_ODDGIRTH_HPP
