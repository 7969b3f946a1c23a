#include "oddchrom/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oddchrom {

std::uint32_t small_graph::degree(std::uint32_t a) const {
  return static_cast<std::uint32_t>(std::popcount(rows[a]));
}

small_graph to_small_graph(const graph &g) {
  if (g.vertex_count() > small_graph::max_order)
    throw std::length_error("graph has " + std::to_string(g.vertex_count()) +
                            " vertices; dense form holds at most " +
                            std::to_string(small_graph::max_order));
  small_graph s;
  s.n = static_cast<std::uint32_t>(g.vertex_count());
  for (auto [u, v] : g.edges())
    s.add_edge(u, v);
  return s;
}

graph to_graph(const small_graph &g) {
  graph_builder b(g.n);
  for (std::uint32_t i = 0; i < g.n; ++i)
    for (std::uint32_t j = i + 1; j < g.n; ++j)
      if (g.adjacent(i, j))
        b.add_edge(i, j);
  return b.build();
}

small_graph relabel(const small_graph &g, std::span<const std::uint8_t> order) {
  std::array<std::uint8_t, small_graph::max_order> inv{};
  for (std::uint32_t i = 0; i < g.n; ++i)
    inv[order[i]] = static_cast<std::uint8_t>(i);
  small_graph out;
  out.n = g.n;
  for (std::uint32_t i = 0; i < g.n; ++i) {
    std::uint32_t row = g.rows[order[i]];
    std::uint32_t mapped = 0;
    while (row) {
      mapped |= 1u << inv[std::countr_zero(row)];
      row &= row - 1;
    }
    out.rows[i] = mapped;
  }
  return out;
}

namespace {

using perm = std::array<std::uint8_t, small_graph::max_order>;

/// Ordered partition of positions 0..n-1; lab[p] is the vertex at p and bit
/// p of `starts` marks the first position of a cell.
struct partition {
  perm lab{};
  std::uint32_t starts = 0;
  std::uint32_t n = 0;

  std::uint32_t cell_end(std::uint32_t p) const {
    const std::uint64_t rest = std::uint64_t(starts) >> (p + 1);
    return rest == 0 ? n : p + 1 + static_cast<std::uint32_t>(std::countr_zero(rest));
  }
  std::uint32_t cell_mask(std::uint32_t p) const {
    std::uint32_t m = 0;
    for (std::uint32_t i = p, e = cell_end(p); i < e; ++i)
      m |= 1u << lab[i];
    return m;
  }
  bool discrete() const {
    return n == 0 || std::popcount(starts) == static_cast<int>(n);
  }
};

void refine(const small_graph &g, partition &part, std::uint32_t queued) {
  // FIFO over cell start positions; `queued` seeds it in position order.
  std::array<std::uint8_t, 64> queue{};
  std::size_t head = 0, tail = 0;
  std::uint32_t in_queue = 0;
  auto push = [&](std::uint32_t p) {
    if (!((in_queue >> p) & 1u)) {
      in_queue |= 1u << p;
      queue[tail++ % queue.size()] = static_cast<std::uint8_t>(p);
    }
  };
  for (std::uint32_t b = queued; b; b &= b - 1)
    push(static_cast<std::uint32_t>(std::countr_zero(b)));

  std::array<std::uint8_t, small_graph::max_order> count{};
  while (head != tail) {
    const std::uint32_t s = queue[head++ % queue.size()];
    in_queue &= ~(1u << s);
    const std::uint32_t splitter = part.cell_mask(s);

    for (std::uint32_t cells = part.starts; cells; cells &= cells - 1) {
      const auto p = static_cast<std::uint32_t>(std::countr_zero(cells));
      const std::uint32_t e = part.cell_end(p);
      if (e - p == 1)
        continue;
      bool uniform = true;
      for (std::uint32_t i = p; i < e; ++i) {
        count[i] = static_cast<std::uint8_t>(
            std::popcount(g.rows[part.lab[i]] & splitter));
        uniform = uniform && count[i] == count[p];
      }
      if (uniform)
        continue;
      // insertion sort of the cell by count, carrying lab along
      for (std::uint32_t i = p + 1; i < e; ++i) {
        const auto c = count[i];
        const auto v = part.lab[i];
        std::uint32_t j = i;
        while (j > p && count[j - 1] > c) {
          count[j] = count[j - 1];
          part.lab[j] = part.lab[j - 1];
          --j;
        }
        count[j] = c;
        part.lab[j] = v;
      }
      for (std::uint32_t i = p + 1; i < e; ++i)
        if (count[i] != count[i - 1])
          part.starts |= 1u << i;
      for (std::uint32_t i = p; i < e; i = part.cell_end(i))
        push(i);
    }
  }
}

std::uint32_t find_root(std::array<std::uint8_t, small_graph::max_order> &parent,
                        std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

class canon_search {
public:
  explicit canon_search(const small_graph &g) : g_(g) {}

  canonical_labeling run(partition root) {
    refine(g_, root, root.starts);
    visit(root);
    canonical_labeling out;
    out.order.assign(best_lab_.begin(), best_lab_.begin() + g_.n);
    out.form = best_form_;
    return out;
  }

private:
  static constexpr int keep_going = -1;

  int visit(const partition &part) {
    if (part.discrete())
      return leaf(part);
    const int depth = static_cast<int>(path_.size());

    std::uint32_t p = 0;
    for (std::uint32_t cells = part.starts; cells; cells &= cells - 1) {
      p = static_cast<std::uint32_t>(std::countr_zero(cells));
      if (part.cell_end(p) - p > 1)
        break;
    }
    const std::uint32_t e = part.cell_end(p);
    std::vector<std::uint8_t> members(part.lab.begin() + p, part.lab.begin() + e);
    std::sort(members.begin(), members.end());

    std::vector<std::uint8_t> tried;
    for (std::uint8_t w : members) {
      if (equivalent_to_tried(w, tried))
        continue;
      tried.push_back(w);

      partition child = part;
      const auto at = std::find(child.lab.begin() + p, child.lab.begin() + e, w);
      std::iter_swap(child.lab.begin() + p, at);
      child.starts |= 1u << (p + 1);
      refine(g_, child, 1u << p);

      path_.push_back(w);
      const int jump = visit(child);
      path_.pop_back();
      if (jump != keep_going && jump < depth)
        return jump;
    }
    return keep_going;
  }

  int leaf(const partition &part) {
    const small_graph form =
        relabel(g_, std::span<const std::uint8_t>(part.lab.data(), g_.n));
    if (!have_first_) {
      have_first_ = true;
      first_form_ = best_form_ = form;
      first_lab_ = best_lab_ = part.lab;
      first_path_ = best_path_ = path_;
      return keep_going;
    }
    if (form == first_form_) {
      record_automorphism(first_lab_, part.lab);
      return common_prefix(first_path_);
    }
    if (form == best_form_) {
      record_automorphism(best_lab_, part.lab);
      return common_prefix(best_path_);
    }
    if (form > best_form_) {
      best_form_ = form;
      best_lab_ = part.lab;
      best_path_ = path_;
    }
    return keep_going;
  }

  void record_automorphism(const perm &from, const perm &to) {
    perm gamma{};
    for (std::uint32_t i = 0; i < g_.n; ++i)
      gamma[from[i]] = to[i];
    generators_.push_back(gamma);
  }

  int common_prefix(const std::vector<std::uint8_t> &other) const {
    std::size_t i = 0;
    while (i < path_.size() && i < other.size() && path_[i] == other[i])
      ++i;
    return static_cast<int>(i);
  }

  /// w is skipped when an automorphism fixing the current path pointwise maps
  /// it onto an already explored sibling.
  bool equivalent_to_tried(std::uint8_t w,
                           const std::vector<std::uint8_t> &tried) const {
    if (tried.empty() || generators_.empty())
      return false;
    std::array<std::uint8_t, small_graph::max_order> parent{};
    std::iota(parent.begin(), parent.begin() + g_.n, std::uint8_t{0});
    for (const auto &gamma : generators_) {
      const bool fixes_path = std::all_of(
          path_.begin(), path_.end(), [&](std::uint8_t v) { return gamma[v] == v; });
      if (!fixes_path)
        continue;
      for (std::uint32_t v = 0; v < g_.n; ++v) {
        const auto a = find_root(parent, v), b = find_root(parent, gamma[v]);
        if (a != b)
          parent[a] = static_cast<std::uint8_t>(b);
      }
    }
    const auto rw = find_root(parent, w);
    return std::any_of(tried.begin(), tried.end(), [&](std::uint8_t t) {
      return find_root(parent, t) == rw;
    });
  }

  const small_graph &g_;
  std::vector<std::uint8_t> path_;
  bool have_first_ = false;
  small_graph first_form_, best_form_;
  perm first_lab_{}, best_lab_{};
  std::vector<std::uint8_t> first_path_, best_path_;
  std::vector<perm> generators_;
};

} // namespace

canonical_labeling canonical_form(const small_graph &g,
                                  std::span<const std::uint32_t> colors) {
  if (g.n > small_graph::max_order)
    throw std::length_error("small_graph order exceeds 32");
  if (!colors.empty() && colors.size() != g.n)
    throw std::invalid_argument("one color per vertex expected");
  if (g.n == 0)
    return {{}, g};

  partition root;
  root.n = g.n;
  std::iota(root.lab.begin(), root.lab.begin() + g.n, std::uint8_t{0});
  root.starts = 1;
  if (!colors.empty()) {
    std::stable_sort(root.lab.begin(), root.lab.begin() + g.n,
                     [&](std::uint8_t a, std::uint8_t b) {
                       return colors[a] < colors[b];
                     });
    for (std::uint32_t i = 1; i < g.n; ++i)
      if (colors[root.lab[i]] != colors[root.lab[i - 1]])
        root.starts |= 1u << i;
  }
  return canon_search(g).run(root);
}

bool same_orbit(const small_graph &g, std::uint32_t a, std::uint32_t b) {
  if (a == b)
    return true;
  if (g.degree(a) != g.degree(b))
    return false;
  std::vector<std::uint32_t> ca(g.n, 0), cb(g.n, 0);
  ca[a] = 1;
  cb[b] = 1;
  return canonical_form(g, ca).form == canonical_form(g, cb).form;
}

} // namespace oddchrom
