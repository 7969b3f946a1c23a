#ifndef ODDCHROM_CONSTRUCTIONS_HPP
#define ODDCHROM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddchrom/graph.hpp"

namespace oddchrom {

using big_int = boost::multiprecision::cpp_int;

inline constexpr std::size_t default_schrijver_cap = 100000;

struct schrijver_params {
  std::uint32_t m = 1;
  std::uint32_t d = 1;
};

/// Schrijver graph on stable m-subsets of {1, ..., 2m+d}; labels[i] is the
/// (1-based, ascending) subset of vertex i. Vertices are in lexicographic
/// order of their labels.
struct labeled_graph {
  graph g;
  std::vector<std::vector<std::uint32_t>> labels;
};

struct schrijver_prediction {
  big_int vertex_count;
  std::uint32_t chromatic_number = 0;
  /// Smallest odd integer >= (2m+d)/d.
  std::uint32_t odd_girth_lower_bound = 0;
};

graph cycle_graph(std::uint32_t length);
graph complete_graph(std::uint32_t n);
graph path_graph(std::uint32_t n);

/// Throws std::length_error when the vertex count would exceed `cap`.
labeled_graph schrijver_graph(schrijver_params p,
                              std::size_t cap = default_schrijver_cap);

schrijver_prediction predicted_schrijver_properties(schrijver_params p);

/// Mycielskian: vertices 0..n-1 copy g, n..2n-1 are the shadows, 2n is the
/// apex joined to every shadow.
graph mycielski(const graph &g);

big_int binomial(std::uint64_t n, std::uint64_t r);

} // namespace oddchrom

#endif // ODDCHROM_CONSTRUCTIONS_HPP
