#include "oddchrom/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace oddchrom {

using nlohmann::json;

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_uint(const std::string &tok, std::uint64_t &out) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
      tok.size() > 18)
    return false;
  out = std::stoull(tok);
  return true;
}

} // namespace

graph read_dimacs(std::istream &is) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n, m;
  std::size_t p_line = 0;
  std::vector<edge> edges;
  std::set<edge> seen;
  while (std::getline(is, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      if (n)
        throw parse_error(line_no, "second problem line");
      std::string kind, ns, ms, extra;
      ls >> kind >> ns >> ms;
      std::uint64_t nv = 0, mv = 0;
      if ((kind != "edge" && kind != "col") || !parse_uint(ns, nv) ||
          !parse_uint(ms, mv) || (ls >> extra))
        throw parse_error(line_no, "expected `p edge <n> <m>`");
      n = nv;
      m = mv;
      p_line = line_no;
    } else if (tag == "e") {
      if (!n)
        throw parse_error(line_no, "edge before the problem line");
      std::string us, vs, extra;
      ls >> us >> vs;
      std::uint64_t u = 0, v = 0;
      if (!parse_uint(us, u) || !parse_uint(vs, v) || (ls >> extra))
        throw parse_error(line_no, "expected `e <u> <v>`");
      if (u < 1 || v < 1 || u > *n || v > *n)
        throw parse_error(line_no, "endpoint outside 1.." + std::to_string(*n));
      if (u == v)
        throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
      const edge e{static_cast<vertex>(std::min(u, v) - 1),
                   static_cast<vertex>(std::max(u, v) - 1)};
      if (!seen.insert(e).second)
        throw parse_error(line_no, "duplicate edge " + std::to_string(u) + " " +
                                       std::to_string(v));
      edges.push_back(e);
    } else {
      throw parse_error(line_no, "unknown line type `" + tag + "`");
    }
  }
  if (!n)
    throw parse_error(line_no, "missing `p edge` line");
  if (edges.size() != *m)
    throw parse_error(p_line, "problem line declares " + std::to_string(*m) +
                                  " edges but " + std::to_string(edges.size()) +
                                  " were given");
  return graph::from_edges(*n, edges);
}

void write_dimacs(std::ostream &os, const graph &g,
                  std::span<const std::string> comments) {
  for (const auto &c : comments)
    os << "c " << c << '\n';
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

graph read_edge_list(std::istream &is) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> declared;
  std::uint64_t order = 0;
  std::vector<edge> edges;
  std::set<edge> seen;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty())
      continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const std::string key = "vertices:";
      if (body.rfind(key, 0) == 0) {
        std::uint64_t v = 0;
        if (!parse_uint(trim(body.substr(key.size())), v))
          throw parse_error(line_no, "bad `# vertices:` directive");
        declared = v;
      }
      continue;
    }
    std::istringstream ls(line);
    std::string us, vs, extra;
    ls >> us >> vs;
    std::uint64_t u = 0, v = 0;
    if (!parse_uint(us, u) || !parse_uint(vs, v) || (ls >> extra))
      throw parse_error(line_no, "expected `<u> <v>`");
    if (u == v)
      throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
    const edge e{static_cast<vertex>(std::min(u, v)),
                 static_cast<vertex>(std::max(u, v))};
    if (!seen.insert(e).second)
      throw parse_error(line_no, "duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
    edges.push_back(e);
    order = std::max(order, std::max(u, v) + 1);
  }
  if (declared) {
    if (*declared < order)
      throw parse_error(line_no, "edge endpoint exceeds declared vertex count");
    order = *declared;
  }
  return graph::from_edges(order, edges);
}

void write_edge_list(std::ostream &os, const graph &g) {
  os << "# vertices: " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges())
    os << u << ' ' << v << '\n';
}

namespace {

bool is_dimacs_path(const std::filesystem::path &path) {
  const auto ext = path.extension().string();
  return ext == ".col" || ext == ".dimacs";
}

} // namespace

graph read_graph_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  return is_dimacs_path(path) ? read_dimacs(in) : read_edge_list(in);
}

void write_graph_file(const std::filesystem::path &path, const graph &g,
                      std::span<const std::string> comments) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  if (is_dimacs_path(path))
    write_dimacs(out, g, comments);
  else
    write_edge_list(out, g);
}

void write_coloring_dimacs(std::ostream &os, const coloring &c) {
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    os << "v " << v + 1 << ' ' << c.assignment[v] + 1 << '\n';
}

json to_json(const graph &g) {
  json edges = json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u, v});
  return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

json to_json(const coloring &c) {
  return {{"num_colors", c.num_colors}, {"assignment", c.assignment}};
}

json to_json(const odd_cycle_certificate &c) {
  return {{"length", c.length()}, {"vertices", c.vertices}};
}

json to_json(const sphere_violation &v) {
  return {{"center", v.center},
          {"radius", v.radius},
          {"edge", {v.violating_edge.first, v.violating_edge.second}}};
}

json to_json(const vertex_set &s) { return s.members(); }

json to_json(const carve_result &r) {
  json balls = json::array();
  for (const auto &b : r.balls)
    balls.push_back(to_json(b));
  json trace = json::array();
  for (const auto &t : r.trace)
    trace.push_back({{"center", t.center},
                     {"radius", t.radius},
                     {"threshold", t.threshold},
                     {"inner_size", t.inner_size},
                     {"outer_size", t.outer_size}});
  return {{"balls", balls},
          {"boundary", to_json(r.boundary)},
          {"trace", trace},
          {"threshold",
           {{"value", r.threshold.value()},
            {"base", r.threshold.base.str()},
            {"exponent", r.threshold.exponent}}}};
}

json to_json(const carve_coloring_failure &f) {
  return {{"level", f.level},
          {"residual", to_json(f.residual)},
          {"colors_available", f.colors_available},
          {"reason", f.reason}};
}

json to_json(const chromatic_result &r) {
  json j = {{"exact", r.exact()},
            {"lower", r.lower},
            {"upper", r.upper},
            {"nodes", r.nodes},
            {"witness", to_json(r.witness)}};
  if (r.exact())
    j["chromatic_number"] = r.upper;
  return j;
}

json to_json(const oracle_result &r) {
  json j = {{"n", r.n},
            {"k", r.k},
            {"status", r.status == oracle_status::exact ? "exact"
                                                        : "lower_bound_only"},
            {"value", r.value},
            {"vertices_searched", r.vertices_searched},
            {"graphs_tested", r.graphs_tested}};
  if (r.witness)
    j["witness"] = to_json(*r.witness);
  if (r.certificate) {
    j["certificate"] = {{"odd_girth", r.certificate->odd_girth
                                          ? json(*r.certificate->odd_girth)
                                          : json(nullptr)},
                        {"coloring_nodes", r.certificate->coloring_nodes},
                        {"colorable_with_n", false}};
  }
  return j;
}

json to_json(const bounds_row &r) {
  auto opt_real = [](const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
  };
  return {{"n", r.n},
          {"k", r.k},
          {"kst_lower", opt_real(r.kst_lower)},
          {"quad_lower", r.quad_lower},
          {"factorial_lower",
           r.factorial_lower ? json(r.factorial_lower->value) : json(nullptr)},
          {"recurrent_lower", r.recurrent_lower},
          {"schrijver_upper_incl", r.schrijver_upper_incl.str()},
          {"erdos_upper_incl",
           r.erdos_upper_incl ? json(r.erdos_upper_incl->str()) : json(nullptr)},
          {"best_lower", r.best_lower.str()},
          {"best_upper", r.best_upper.str()}};
}

} // namespace oddchrom
