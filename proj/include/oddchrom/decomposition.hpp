#ifndef ODDCHROM_DECOMPOSITION_HPP
#define ODDCHROM_DECOMPOSITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddchrom/graph.hpp"

namespace oddchrom {

// Ball carving for graphs without odd cycles of length <= 2k-1.
//
// Each step picks a center v in the remaining graph R and the smallest radius
// m with |U_m(v,R)| <= T * |U_{m-1}(v,R)|. The ball U_{m-1}(v,R) becomes a
// piece, the sphere S_m(v,R) joins the boundary, and U_m(v,R) is removed from
// R. Pieces are balls of radius <= k-1 and hence bipartite, no edge joins two
// pieces, and (T - 1) * (total piece size) >= |boundary|.
//
// The threshold T is base^(1/exponent). Comparisons are done on the integer
// form |U_m|^exponent <= base * |U_{m-1}|^exponent.

enum class center_rule {
  first,    ///< lowest remaining index
  min_ball, ///< remaining vertex with the smallest (k-1)-ball in R
};

struct carve_threshold {
  boost::multiprecision::cpp_int base;
  std::uint32_t exponent = 1;

  double value() const;
};

struct carve_step {
  vertex center = 0;
  std::uint32_t radius = 0; ///< radius of the carved ball (m - 1)
  double threshold = 0.0;
  std::size_t inner_size = 0; ///< |U_{m-1}|
  std::size_t outer_size = 0; ///< |U_m|
};

struct carve_result {
  std::vector<vertex_set> balls;
  vertex_set boundary;
  std::vector<carve_step> trace;
  carve_threshold threshold;
};

/// max over v of |U_{k-1}(v)|. Throws std::invalid_argument on an empty graph.
std::size_t compute_d(const graph &g, std::uint32_t k);

/// Radii in [1, k-1], threshold d^(1/(k-1)) with d = compute_d(g, k) fixed
/// on the input graph. Throws sphere_violation_error when g has an odd cycle
/// of length <= 2k-1.
carve_result carve(const graph &g, std::uint32_t k,
                   center_rule rule = center_rule::first);

/// Radii in [1, k], threshold |V|^(1/k).
carve_result carve_order_threshold(const graph &g, std::uint32_t k,
                                   center_rule rule = center_rule::first);

/// Checks partition, boundary containment, bipartite balls, the exact integer
/// form of (T-1)*sum|U_i| >= |N|, the absence of edges between balls and
/// |N| <= |V|(T-1)/T + 1e-9. Returns a description of the first failure.
std::optional<std::string> verify_carve(const graph &g,
                                        const carve_result &r);

} // namespace oddchrom

#endif // ODDCHROM_DECOMPOSITION_HPP
