#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddchrom/constructions.hpp"
#include "oddchrom/io.hpp"

using namespace oddchrom;

namespace {

graph parse(const std::string &text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

std::size_t error_line(const std::string &text) {
  try {
    parse(text);
  } catch (const parse_error &e) {
    return e.line();
  }
  return 0;
}

} // namespace

TEST_CASE("DIMACS writer output is exact") {
  std::ostringstream os;
  const std::vector<std::string> comments{"five cycle"};
  write_dimacs(os, cycle_graph(5), comments);
  CHECK(os.str() == "c five cycle\n"
                    "p edge 5 5\n"
                    "e 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
}

TEST_CASE("DIMACS round trip") {
  for (const auto &g : {cycle_graph(7), mycielski(cycle_graph(5)),
                        schrijver_graph({3, 2}).g, graph(4), graph(0)}) {
    std::ostringstream os;
    write_dimacs(os, g);
    CHECK(parse(os.str()) == g);
  }
}

TEST_CASE("DIMACS parser accepts comments, blank lines and `p col`") {
  const auto g = parse("c hi\n\np col 3 2\ne 3 1\nc mid\ne 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<edge>{{0, 2}, {1, 2}});
}

TEST_CASE("DIMACS parser errors carry line numbers") {
  CHECK(error_line("p edge 3 1\ne 2 2\n") == 2);
  CHECK(error_line("p edge 3 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(error_line("p edge 3 1\ne 1 4\n") == 2);
  CHECK(error_line("p edge 3 1\ne 0 1\n") == 2);
  CHECK(error_line("c\np edge 3 2\ne 1 2\n") == 2);
  CHECK(error_line("e 1 2\n") == 1);
  CHECK(error_line("p edge 3\n") == 1);
  CHECK(error_line("p edge 3 0\nx 1 2\n") == 2);
  CHECK(error_line("p edge 3 1\ne 1 x\n") == 2);
  CHECK(error_line("p edge 3 0\np edge 3 0\n") == 2);
  CHECK(error_line("c only comments\n") == 1);
}

TEST_CASE("edge list round trip and errors") {
  const auto g = mycielski(cycle_graph(5));
  std::ostringstream os;
  write_edge_list(os, g);
  std::istringstream in(os.str());
  CHECK(read_edge_list(in) == g);

  std::istringstream trailing("# vertices: 5\n0 1\n");
  CHECK(read_edge_list(trailing).vertex_count() == 5);
  std::istringstream loop("0 0\n");
  CHECK_THROWS_AS(read_edge_list(loop), parse_error);
  std::istringstream dup("0 1\n1 0\n");
  CHECK_THROWS_AS(read_edge_list(dup), parse_error);
  std::istringstream small("# vertices: 1\n0 3\n");
  CHECK_THROWS_AS(read_edge_list(small), parse_error);
}

TEST_CASE("graph files are dispatched by extension") {
  const auto dir = std::filesystem::temp_directory_path() / "oddchrom_io_test";
  std::filesystem::create_directories(dir);
  const auto g = schrijver_graph({2, 2}).g;
  for (const char *name : {"g.col", "g.dimacs", "g.txt"}) {
    write_graph_file(dir / name, g);
    CHECK(read_graph_file(dir / name) == g);
  }
  std::ifstream col(dir / "g.col");
  std::string first;
  std::getline(col, first);
  CHECK(first == "p edge 9 18");
  CHECK_THROWS(read_graph_file(dir / "missing.col"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("coloring as DIMACS assignment lines") {
  std::ostringstream os;
  write_coloring_dimacs(os, {{0, 1, 2}, 3});
  CHECK(os.str() == "v 1 1\nv 2 2\nv 3 3\n");
}

TEST_CASE("JSON forms") {
  const auto j = to_json(cycle_graph(3));
  CHECK(j["vertex_count"] == 3);
  CHECK(j["edges"].size() == 3);
  CHECK(j["edges"][0] == nlohmann::json::array({0, 1}));
  const auto c = to_json(coloring{{0, 1}, 2});
  CHECK(c["assignment"] == nlohmann::json::array({0, 1}));
  const auto v = to_json(sphere_violation{0, 2, {2, 3}});
  CHECK(v["edge"] == nlohmann::json::array({2, 3}));
  const auto r = to_json(carve(cycle_graph(5), 2));
  CHECK(r["balls"] == nlohmann::json::parse("[[0],[2]]"));
  CHECK(r["boundary"] == nlohmann::json::array({1, 3, 4}));
  const auto b = to_json(make_bounds_row(1, 2));
  CHECK(b["kst_lower"].is_null());
  CHECK(b["best_lower"] == "1");
}
