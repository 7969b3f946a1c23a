// oddchrom: command-line front end for odd-girth coloring bounds, witness
// constructions, decompositions and the exact small-case oracle.
//
// Exit codes: 0 success, 1 negative finding (violation, coloring failure,
// value not determined), 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "oddchrom/bounds.hpp"
#include "oddchrom/coloring.hpp"
#include "oddchrom/constructions.hpp"
#include "oddchrom/decomposition.hpp"
#include "oddchrom/io.hpp"
#include "oddchrom/oddgirth.hpp"
#include "oddchrom/oracle.hpp"

namespace {

using namespace oddchrom;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_or(const char *name, std::uint64_t fallback) {
  const char *raw = std::getenv(name);
  if (!raw || !*raw)
    return fallback;
  try {
    return std::stoull(raw);
  } catch (const std::exception &) {
    throw usage_error(std::string("environment variable ") + name +
                      " is not a positive integer");
  }
}

struct range {
  std::uint32_t lo = 0, hi = 0;
};

range parse_range(const std::string &text, const char *flag) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    range r;
    if (dots == std::string::npos) {
      r.lo = r.hi = static_cast<std::uint32_t>(std::stoul(text, &used));
      if (used != text.size())
        throw std::invalid_argument(text);
    } else {
      const auto a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = static_cast<std::uint32_t>(std::stoul(a, &used));
      if (used != a.size())
        throw std::invalid_argument(a);
      r.hi = static_cast<std::uint32_t>(std::stoul(b, &used));
      if (used != b.size())
        throw std::invalid_argument(b);
    }
    if (r.lo > r.hi)
      throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error &) {
    throw usage_error(std::string("invalid range for ") + flag + ": '" + text +
                      "' (expected N or LO..HI)");
  }
}

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

void emit_graph(const graph &g, const std::string &out,
                const std::vector<std::string> &comments) {
  if (out.empty() || out == "-")
    write_dimacs(std::cout, g, comments);
  else
    write_graph_file(out, g, comments);
}

center_rule parse_rule(const std::string &rule) {
  if (rule == "first")
    return center_rule::first;
  if (rule == "min_ball")
    return center_rule::min_ball;
  throw usage_error("unknown center rule " + rule);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Graphs without short odd cycles: bounds, constructions, "
               "colorings and exact small cases"};
  app.require_subcommand(1);

  unsigned jobs = 1;
  std::uint64_t seed = 1;
  app.add_option("--jobs", jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomized generators");

  // bounds
  auto *bounds_cmd = app.add_subcommand("bounds", "Table of bounds on f(n,k)");
  std::string n_text, k_text, bounds_format = "csv";
  bounds_cmd->add_option("--n", n_text, "n or LO..HI")->required();
  bounds_cmd->add_option("--k", k_text, "k or LO..HI")->required();
  bounds_cmd->add_option("--format", bounds_format, "csv, markdown or json")
      ->check(CLI::IsMember({"csv", "markdown", "json"}));

  // gen
  auto *gen_cmd = app.add_subcommand("gen", "Generate a graph as DIMACS");
  gen_cmd->require_subcommand(1);
  std::string gen_out;
  gen_cmd->add_option("--out", gen_out, "Output file (.col for DIMACS, "
                                        "anything else for an edge list)");
  auto *gen_schrijver = gen_cmd->add_subcommand("schrijver", "Schrijver graph");
  std::uint32_t sch_m = 0, sch_d = 0;
  gen_schrijver->add_option("--m", sch_m)->required()->check(CLI::PositiveNumber);
  gen_schrijver->add_option("--d", sch_d)->required()->check(CLI::PositiveNumber);
  auto *gen_cycle = gen_cmd->add_subcommand("cycle", "Cycle graph");
  std::uint32_t cycle_len = 0;
  gen_cycle->add_option("--len", cycle_len)->required();
  auto *gen_myc = gen_cmd->add_subcommand("mycielski", "Mycielskian of a graph");
  std::string myc_input;
  gen_myc->add_option("--input", myc_input)->required();
  auto *gen_random = gen_cmd->add_subcommand("random", "Erdos-Renyi G(v, p)");
  std::uint32_t rnd_v = 10;
  double rnd_p = 0.3;
  gen_random->add_option("--vertices", rnd_v)->required();
  gen_random->add_option("--p", rnd_p)->check(CLI::Range(0.0, 1.0));
  for (auto *sub : {gen_schrijver, gen_cycle, gen_myc, gen_random})
    sub->add_option("--out", gen_out, "Output file");

  // check
  auto *check_cmd = app.add_subcommand(
      "check", "Look for odd cycles of length <= 2k-1 via sphere independence");
  std::string input;
  std::uint32_t k = 2;
  check_cmd->add_option("--input", input)->required();
  check_cmd->add_option("--k", k)->required();

  // color
  auto *color_cmd = app.add_subcommand("color", "Color a graph");
  std::uint32_t colors = 0;
  std::string method = "exact", color_format = "json";
  std::uint32_t center = 0;
  color_cmd->add_option("--input", input)->required();
  color_cmd->add_option("--n", colors, "Number of colors")->required();
  color_cmd->add_option("--k", k);
  color_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "carve", "carve-min", "carve-order", "layer"}));
  color_cmd->add_option("--center", center, "Center vertex for --method layer (0-based)");
  color_cmd->add_option("--format", color_format)
      ->check(CLI::IsMember({"json", "dimacs"}));

  // decompose
  auto *dec_cmd = app.add_subcommand("decompose", "Ball-carving partition");
  std::string rule = "first";
  bool order_threshold = false;
  dec_cmd->add_option("--input", input)->required();
  dec_cmd->add_option("--k", k)->required();
  dec_cmd->add_option("--rule", rule)->check(CLI::IsMember({"first", "min_ball"}));
  dec_cmd->add_flag("--order-threshold", order_threshold,
                    "Threshold |V|^(1/k) with radii up to k");

  // oracle
  auto *oracle_cmd = app.add_subcommand("oracle", "Exact f(n,k) for small cases");
  std::uint32_t vmax = 0;
  bool stretch = false, no_connected = false, no_degree = false, no_ball = false;
  std::string witness_out;
  oracle_cmd->add_option("--n", colors)->required();
  oracle_cmd->add_option("--k", k)->required();
  oracle_cmd->add_option("--vmax", vmax)->required();
  oracle_cmd->add_flag("--stretch", stretch, "Allow up to 11 vertices");
  oracle_cmd->add_flag("--no-prune-connected", no_connected);
  oracle_cmd->add_flag("--no-prune-degree", no_degree);
  oracle_cmd->add_flag("--no-prune-ball", no_ball);
  oracle_cmd->add_option("--witness-out", witness_out, "Write the witness as DIMACS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const std::uint64_t budget =
        env_or("ODDCHROM_SOLVER_BUDGET", default_solver_budget);

    if (bounds_cmd->parsed()) {
      const auto nr = parse_range(n_text, "--n");
      const auto kr = parse_range(k_text, "--k");
      std::vector<bounds_row> rows;
      try {
        rows = bounds_table(nr.lo, nr.hi, kr.lo, kr.hi);
      } catch (const std::out_of_range &e) {
        throw usage_error(e.what());
      }
      if (bounds_format == "csv") {
        write_bounds_csv(std::cout, rows);
      } else if (bounds_format == "markdown") {
        write_bounds_markdown(std::cout, rows);
      } else {
        json arr = json::array();
        for (const auto &r : rows)
          arr.push_back(to_json(r));
        emit({{"command", "bounds"}, {"rows", arr}});
      }
      return exit_ok;
    }

    if (gen_cmd->parsed()) {
      if (gen_schrijver->parsed()) {
        const auto cap = env_or("ODDCHROM_SCHRIJVER_CAP", default_schrijver_cap);
        const auto lg = schrijver_graph({sch_m, sch_d}, cap);
        std::vector<std::string> comments{
            "Schrijver graph m=" + std::to_string(sch_m) +
            " d=" + std::to_string(sch_d)};
        for (std::size_t i = 0; i < lg.labels.size(); ++i) {
          std::ostringstream os;
          os << "vertex " << i + 1 << " = {";
          for (std::size_t j = 0; j < lg.labels[i].size(); ++j)
            os << (j ? "," : "") << lg.labels[i][j];
          os << '}';
          comments.push_back(os.str());
        }
        emit_graph(lg.g, gen_out, comments);
      } else if (gen_cycle->parsed()) {
        emit_graph(cycle_graph(cycle_len), gen_out,
                   {"cycle of length " + std::to_string(cycle_len)});
      } else if (gen_myc->parsed()) {
        emit_graph(mycielski(read_graph_file(myc_input)), gen_out,
                   {"Mycielskian of " + myc_input});
      } else {
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(rnd_p);
        graph_builder b(rnd_v);
        for (vertex u = 0; u < rnd_v; ++u)
          for (vertex v = u + 1; v < rnd_v; ++v)
            if (coin(rng))
              b.add_edge(u, v);
        emit_graph(b.build(), gen_out,
                   {"G(" + std::to_string(rnd_v) + ", " + std::to_string(rnd_p) +
                    ") seed " + std::to_string(seed)});
      }
      return exit_ok;
    }

    if (check_cmd->parsed()) {
      const graph g = read_graph_file(input);
      const auto viol = check_sphere_independence(g, k);
      const auto girth = odd_girth(g);
      json j = {{"command", "check"},
                {"k", k},
                {"vertex_count", g.vertex_count()},
                {"edge_count", g.edge_count()},
                {"ok", !viol.has_value()},
                {"odd_girth", girth ? json(*girth) : json(nullptr)}};
      if (viol) {
        j["violation"] = to_json(*viol);
        j["certificate"] = to_json(expand_violation(g, *viol));
      }
      emit(j);
      return viol ? exit_negative : exit_ok;
    }

    if (color_cmd->parsed()) {
      const graph g = read_graph_file(input);
      std::optional<coloring> result;
      json j = {{"command", "color"}, {"method", method}, {"n", colors}};
      if (method == "exact") {
        const auto r = exact_chromatic(g, budget);
        j["chromatic"] = to_json(r);
        if (r.upper <= colors)
          result = r.witness;
      } else if (method == "layer") {
        result = layer_2_coloring(g, center, k);
      } else {
        carve_coloring_options opts;
        opts.rule = method == "carve-min" ? center_rule::min_ball : center_rule::first;
        opts.order_threshold = method == "carve-order";
        auto r = recursive_carve_coloring(g, colors, k, opts);
        if (auto *c = std::get_if<coloring>(&r))
          result = *c;
        else
          j["failure"] = to_json(std::get<carve_coloring_failure>(r));
      }
      if (result && result->num_colors > colors)
        result.reset();
      if (result && color_format == "dimacs") {
        write_coloring_dimacs(std::cout, *result);
        return exit_ok;
      }
      j["success"] = result.has_value();
      if (result) {
        j["coloring"] = to_json(*result);
        j["proper"] = !verify_coloring(g, *result).has_value();
      }
      emit(j);
      return result ? exit_ok : exit_negative;
    }

    if (dec_cmd->parsed()) {
      const graph g = read_graph_file(input);
      json j = {{"command", "decompose"}, {"k", k}, {"rule", rule},
                {"order_threshold", order_threshold}};
      try {
        const auto r = order_threshold ? carve_order_threshold(g, k, parse_rule(rule))
                                       : carve(g, k, parse_rule(rule));
        const auto problem = verify_carve(g, r);
        j["ok"] = true;
        j["result"] = to_json(r);
        j["invariants_hold"] = !problem.has_value();
        if (problem)
          j["invariant_failure"] = *problem;
        emit(j);
        return problem ? exit_negative : exit_ok;
      } catch (const sphere_violation_error &e) {
        j["ok"] = false;
        j["violation"] = to_json(e.violation());
        j["certificate"] = to_json(expand_violation(g, e.violation()));
        emit(j);
        return exit_negative;
      }
    }

    if (oracle_cmd->parsed()) {
      oracle_options opts;
      opts.cap = static_cast<std::uint32_t>(
          env_or("ODDCHROM_VMAX_CAP", stretch ? 11 : default_oracle_cap));
      opts.jobs = jobs;
      opts.coloring_budget = budget;
      opts.prunes = {!no_connected, !no_degree, !no_ball};
      oracle_result r;
      try {
        r = exact_f(colors, k, vmax, opts);
      } catch (const std::length_error &e) {
        throw usage_error(e.what());
      }
      json j = to_json(r);
      j["command"] = "oracle";
      if (r.witness && !witness_out.empty()) {
        write_graph_file(witness_out, *r.witness,
                         std::vector<std::string>{
                             "witness: odd girth >= " + std::to_string(2 * k + 1) +
                             ", not " + std::to_string(colors) + "-colorable"});
        j["witness_path"] = witness_out;
      }
      emit(j);
      return r.status == oracle_status::exact ? exit_ok : exit_negative;
    }
  } catch (const usage_error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const parse_error &e) {
    std::cerr << "error: " << input << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const sphere_violation_error &e) {
    json j = {{"command", command},
              {"error", "precondition"},
              {"message", e.what()},
              {"violation", to_json(e.violation())}};
    emit(j);
    return exit_negative;
  } catch (const coloring_precondition_error &e) {
    emit({{"command", command}, {"error", "precondition"}, {"message", e.what()}});
    return exit_negative;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
