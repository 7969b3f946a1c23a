#include "oddchrom/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddchrom {

graph cycle_graph(std::uint32_t length) {
  if (length < 3)
    throw std::invalid_argument("cycle length must be >= 3, got " +
                                std::to_string(length));
  graph_builder b(length);
  for (vertex i = 0; i < length; ++i)
    b.add_edge(i, (i + 1) % length);
  return b.build();
}

graph complete_graph(std::uint32_t n) {
  graph_builder b(n);
  for (vertex i = 0; i < n; ++i)
    for (vertex j = i + 1; j < n; ++j)
      b.add_edge(i, j);
  return b.build();
}

graph path_graph(std::uint32_t n) {
  graph_builder b(n);
  for (vertex i = 0; i + 1 < n; ++i)
    b.add_edge(i, i + 1);
  return b.build();
}

big_int binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n)
    return 0;
  r = std::min(r, n - r);
  big_int out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

schrijver_prediction predicted_schrijver_properties(schrijver_params p) {
  if (p.m < 1 || p.d < 1)
    throw std::invalid_argument("Schrijver parameters need m >= 1 and d >= 1");
  const std::uint64_t m = p.m, d = p.d;
  schrijver_prediction out;
  big_int num = big_int(2 * m + d) * binomial(m + d, d);
  if (num % (m + d) != 0)
    throw std::logic_error("Schrijver vertex count is not an integer");
  out.vertex_count = num / (m + d);
  out.chromatic_number = static_cast<std::uint32_t>(d + 2);
  std::uint64_t lb = (2 * m + d + d - 1) / d;
  if (lb % 2 == 0)
    ++lb;
  out.odd_girth_lower_bound = static_cast<std::uint32_t>(lb);
  return out;
}

labeled_graph schrijver_graph(schrijver_params p, std::size_t cap) {
  const auto predicted = predicted_schrijver_properties(p);
  if (predicted.vertex_count > cap)
    throw std::length_error("Schrijver graph (m=" + std::to_string(p.m) +
                            ", d=" + std::to_string(p.d) + ") has " +
                            predicted.vertex_count.str() +
                            " vertices, above the cap of " +
                            std::to_string(cap));
  const std::uint32_t ground = 2 * p.m + p.d;
  labeled_graph out;

  // Lexicographic m-combinations of 1..ground; consecutive elements must
  // differ by at least 2, and the first and last must not wrap around.
  std::vector<std::uint32_t> cur;
  auto extend = [&](auto &&self, std::uint32_t next) -> void {
    if (cur.size() == p.m) {
      if (p.m < 2 || cur.back() - cur.front() < ground - 1)
        out.labels.push_back(cur);
      return;
    }
    const auto remaining = static_cast<std::uint32_t>(p.m - cur.size());
    // Each further element needs a gap of 2 after this one.
    for (std::uint32_t x = next; x + 2 * (remaining - 1) <= ground; ++x) {
      cur.push_back(x);
      self(self, x + 2);
      cur.pop_back();
    }
  };
  extend(extend, 1);

  const auto n = out.labels.size();
  graph_builder b(n);
  for (vertex i = 0; i < n; ++i) {
    for (vertex j = i + 1; j < n; ++j) {
      const auto &x = out.labels[i];
      const auto &y = out.labels[j];
      std::size_t a = 0, c = 0;
      bool disjoint = true;
      while (a < x.size() && c < y.size()) {
        if (x[a] == y[c]) {
          disjoint = false;
          break;
        }
        x[a] < y[c] ? ++a : ++c;
      }
      if (disjoint)
        b.add_edge(i, j);
    }
  }
  out.g = b.build();
  return out;
}

graph mycielski(const graph &g) {
  const auto n = static_cast<vertex>(g.vertex_count());
  graph_builder b(2 * static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : g.edges()) {
    b.add_edge(u, v);
    b.add_edge(u, n + v);
    b.add_edge(n + u, v);
  }
  for (vertex i = 0; i < n; ++i)
    b.add_edge(n + i, 2 * n);
  return b.build();
}

} // namespace oddchrom
