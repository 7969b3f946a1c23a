#ifndef ODDCHROM_IO_HPP
#define ODDCHROM_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "oddchrom/bounds.hpp"
#include "oddchrom/coloring.hpp"
#include "oddchrom/decomposition.hpp"
#include "oddchrom/graph.hpp"
#include "oddchrom/oddgirth.hpp"
#include "oddchrom/oracle.hpp"

namespace oddchrom {

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// DIMACS .col: `c` comments, one `p edge <n> <m>` line, then `e <u> <v>` with
// 1-based endpoints. Self-loops, duplicates and a wrong edge count are
// rejected.
graph read_dimacs(std::istream &is);
void write_dimacs(std::ostream &os, const graph &g,
                  std::span<const std::string> comments = {});

// Edge list: one 0-based `u v` pair per line, `#` comments. A
// `# vertices: N` comment fixes the order (for trailing isolated vertices).
graph read_edge_list(std::istream &is);
void write_edge_list(std::ostream &os, const graph &g);

/// DIMACS for *.col / *.dimacs, edge list otherwise.
graph read_graph_file(const std::filesystem::path &path);
void write_graph_file(const std::filesystem::path &path, const graph &g,
                      std::span<const std::string> comments = {});

/// `v <vertex> <color>` lines, both 1-based.
void write_coloring_dimacs(std::ostream &os, const coloring &c);

// JSON forms use 0-based vertex indices.
nlohmann::json to_json(const graph &g);
nlohmann::json to_json(const coloring &c);
nlohmann::json to_json(const odd_cycle_certificate &c);
nlohmann::json to_json(const sphere_violation &v);
nlohmann::json to_json(const vertex_set &s);
nlohmann::json to_json(const carve_result &r);
nlohmann::json to_json(const carve_coloring_failure &f);
nlohmann::json to_json(const chromatic_result &r);
nlohmann::json to_json(const oracle_result &r);
nlohmann::json to_json(const bounds_row &r);

} // namespace oddchrom

#endif // ODDCHROM_IO_HPP
