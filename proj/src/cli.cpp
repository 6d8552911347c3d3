#include "tlir/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>

#include "tlir/acyclic.hpp"
#include "tlir/bipartite.hpp"
#include "tlir/cactus.hpp"
#include "tlir/chromatic.hpp"
#include "tlir/errors.hpp"
#include "tlir/generators.hpp"
#include "tlir/io.hpp"
#include "tlir/split.hpp"
#include "tlir/structure.hpp"
#include "tlir/subcubic.hpp"
#include "tlir/sweep.hpp"

namespace tlir {

namespace {

const std::map<std::string, Algo>& algo_names() {
  static const std::map<std::string, Algo> names{
      {"auto", Algo::kAuto},           {"bipartite", Algo::kBipartite},
      {"cactus", Algo::kCactus},       {"subcubic", Algo::kSubcubic},
      {"split", Algo::kSplit},         {"chromatic", Algo::kChromatic},
      {"outerplanar", Algo::kOuterplanar}, {"planar", Algo::kPlanar},
      {"oracle", Algo::kOracle},
  };
  return names;
}

// Largest instance handed to exhaustive acyclic search during auto dispatch.
constexpr std::size_t kAutoSearchVertices = 15;

TotalColoring oracle_coloring(const TotalGraph& g, const SearchBudget& budget) {
  TlirSearchResult r = exact_tlir(g, budget);
  if (r.status == SearchStatus::kFound) return r.witness;
  if (r.budget_hit) throw BudgetExhausted("exact TLIR search stopped by its budget");
  throw BudgetExhausted("no TLIR coloring with at most " + std::to_string(budget.max_colors) +
                        " colors");
}

// Tries a construction that may legitimately not apply.
template <typename F>
std::optional<TotalColoring> attempt(F&& f) {
  try {
    return f();
  } catch (const PreconditionError&) {
    return std::nullopt;
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

TotalColoring color_component(const TotalGraph& g, const SearchBudget& budget, std::string& route) {
  if (!g.all_full()) {
    route = "oracle";
    return oracle_coloring(g, budget);
  }
  ClassReport cls = classify(g);
  if (cls.is_bipartite) {
    route = "bipartite";
    return bipartite_tlir2(g, *cls.parts);
  }
  if (cls.is_cactus) {
    route = "cactus";
    return cactus_tlir2(g);
  }
  if (cls.is_subcubic) {
    route = "subcubic";
    return subcubic_tlir2(g);
  }
  if (cls.is_regular) {
    route = "regular";
    return regular_layered_tlir2(g);
  }
  if (cls.is_split) {
    route = "split";
    return split_tlir2(g);
  }
  const std::size_t n = g.num_vertices();
  if (is_maximal_outerplanar(g)) {
    route = "outerplanar";
    return outerplanar_tlir3(g);
  }
  if (n <= kAutoSearchVertices && g.num_edges() <= 2 * n - 3)
    if (auto c = attempt([&] { return outerplanar_tlir3(g, nullptr, budget); })) {
      route = "outerplanar";
      return *c;
    }
  ProperClasses classes = maximal_proper_classes(g);
  if (classes.classes.size() <= 3) {
    route = "chromatic";
    return chromatic_tlir(g, classes);
  }
  if (n <= kAutoSearchVertices && g.num_edges() <= 3 * n - 6)
    if (auto c = attempt([&] { return planar_tlir_k(g, 5, AcyclicHypothesis::kPlanar, budget); })) {
      route = "planar";
      return *c;
    }
  route = "chromatic";
  return chromatic_tlir(g, classes);
}

}  // namespace

Algo parse_algo(const std::string& name) {
  auto it = algo_names().find(name);
  if (it == algo_names().end()) throw InputError("unknown algorithm '" + name + "'");
  return it->second;
}

std::string to_string(Algo a) {
  for (const auto& [name, value] : algo_names())
    if (value == a) return name;
  return "?";
}

TotalColoring color_graph(const TotalGraph& g, Algo algo, const SearchBudget& budget, ColorReport* report) {
  if (report) report->routes.clear();
  switch (algo) {
    case Algo::kBipartite: return bipartite_tlir2(g);
    case Algo::kCactus: return cactus_tlir2(g);
    case Algo::kSubcubic: return subcubic_tlir2(g);
    case Algo::kSplit: return split_tlir2(g);
    case Algo::kChromatic: return chromatic_tlir(g);
    case Algo::kOuterplanar: return outerplanar_tlir3(g, nullptr, budget);
    case Algo::kPlanar: return planar_tlir_k(g, 5, AcyclicHypothesis::kPlanar, budget);
    case Algo::kOracle: return oracle_coloring(g, budget);
    case Algo::kAuto: break;
  }
  TotalColoring c;
  for (const auto& comp : connected_components(g)) {
    std::string route;
    c.merge(color_component(induced_subgraph(g, std::set<VertexId>(comp.begin(), comp.end())), budget, route));
    if (report) report->routes.push_back(route);
  }
  return c;
}

namespace {

struct BudgetFlags {
  std::optional<long long> ms;
  std::optional<std::uint64_t> nodes;
  int max_colors = 4;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget-ms", ms, "Time limit per search in milliseconds (default: TLIR_BUDGET_MS)");
    cmd->add_option("--node-limit", nodes, "Node limit per search");
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.max_colors = max_colors;
    b.node_limit = nodes;
    if (ms) {
      b.time_limit = std::chrono::milliseconds(*ms);
    } else if (const char* env = std::getenv("TLIR_BUDGET_MS"); env && *env) {
      try {
        b.time_limit = std::chrono::milliseconds(std::stoll(env));
      } catch (const std::exception&) {
        throw InputError(std::string("TLIR_BUDGET_MS is not a number: ") + env);
      }
    }
    return b;
  }
};

void print_violations(const TlirReport& report, std::ostream& out) {
  for (const Violation& v : report.violations)
    out << "edge " << v.edge.u << ' ' << v.edge.v << " class " << v.color << " degrees " << v.degree_u
        << ' ' << v.degree_v << '\n';
  for (VertexId v : report.uncolored_vertices) out << "uncolored vertex " << v << '\n';
  for (const Edge& e : report.uncolored_edges) out << "uncolored edge " << e.u << ' ' << e.v << '\n';
  for (VertexId v : report.colored_empty) out << "colored empty vertex " << v << '\n';
}

bool certified(const TotalGraph& g, GraphClass cls) {
  const std::size_t n = g.num_vertices();
  ClassReport r = classify(g);
  switch (cls) {
    case GraphClass::kTree: return r.is_tree;
    case GraphClass::kBipartite: return r.is_bipartite;
    case GraphClass::kCactus: return r.is_cactus;
    case GraphClass::kSubcubic: return r.is_subcubic;
    case GraphClass::kSplit: return r.is_split;
    case GraphClass::kRegular: return r.is_regular && r.connected;
    case GraphClass::kMaximalOuterplanar: return is_maximal_outerplanar(g);
    case GraphClass::kPlanarTriangulation: return r.connected && (n < 3 || g.num_edges() == 3 * n - 6);
    case GraphClass::kOuterplanar: return r.connected && (n < 2 || g.num_edges() <= 2 * n - 3);
    case GraphClass::kConnected: return r.connected;
  }
  return false;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally irregular total colorings: constructions, verification, exact oracles"};
  app.require_subcommand(1);

  std::string in_path, out_path, dot_path, algo_name = "auto";
  BudgetFlags color_budget;
  auto* color = app.add_subcommand("color", "Color a graph file and self-verify the result");
  color->add_option("--algo", algo_name, "auto|bipartite|cactus|subcubic|split|chromatic|outerplanar|planar|oracle");
  color->add_option("--in", in_path, "Graph file")->required();
  color->add_option("--out", out_path, "Coloring file to write")->required();
  color->add_option("--dot", dot_path, "Optional Graphviz output");
  color->add_option("--max-colors", color_budget.max_colors, "Color cap for the oracle algorithm");
  color_budget.add_to(color);

  std::string graph_path, coloring_path;
  bool partial = false;
  auto* verify = app.add_subcommand("verify", "Check a coloring file against a graph file");
  verify->add_option("--graph", graph_path, "Graph file")->required();
  verify->add_option("--coloring", coloring_path, "Coloring file")->required();
  verify->add_flag("--partial", partial, "Allow uncolored elements");

  std::string mode = "tlir";
  BudgetFlags oracle_budget;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum number of colors");
  oracle->add_option("--graph", graph_path, "Graph file")->required();
  oracle->add_option("--mode", mode, "tlir|lir|acyclic")->check(CLI::IsMember({"tlir", "lir", "acyclic"}));
  oracle->add_option("--max-colors", oracle_budget.max_colors, "Largest color count tried");
  oracle_budget.add_to(oracle);

  GenSpec spec;
  std::string class_name;
  std::string gen_out = "-";
  auto* gen_cmd = app.add_subcommand("gen", "Write a seeded random graph of a class");
  gen_cmd->add_option("--class", class_name, "tree|bipartite|cactus|subcubic|split|regular|"
                                             "maximal_outerplanar|planar_triangulation|outerplanar|connected")
      ->required();
  gen_cmd->add_option("--n", spec.n, "Number of vertices")->required();
  gen_cmd->add_option("--seed", spec.seed, "Seed");
  gen_cmd->add_option("--degree", spec.degree, "Degree for regular graphs");
  gen_cmd->add_option("--p", spec.p, "Edge probability where it applies");
  gen_cmd->add_option("--clique", spec.clique_size, "Clique size for split graphs");
  gen_cmd->add_option("--out", gen_out, "Output file, '-' for stdout");

  std::size_t n_max = 5;
  int jobs = 0;
  BudgetFlags sweep_budget;
  sweep_budget.max_colors = 3;
  auto* sweep = app.add_subcommand("sweep", "Exact tlir of every connected graph up to n vertices");
  sweep->add_option("--n-max", n_max, "Largest vertex count")->required()->check(CLI::Range(1, 7));
  sweep->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  sweep_budget.add_to(sweep);

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*color) {
      Algo algo = parse_algo(algo_name);
      TotalGraph g = parse_graph(read_file(in_path));
      ColorReport report;
      TotalColoring c = color_graph(g, algo, color_budget.budget(), &report);
      TlirReport check = verify_tlir(g, c);
      if (!check.valid()) {
        err << "internal error: the " << to_string(algo) << " coloring failed verification\n";
        print_violations(check, err);
        return kExitInvalid;
      }
      write_file(out_path, serialize_coloring(c));
      if (!dot_path.empty()) write_file(dot_path, to_dot(g, &c));
      out << "algo " << to_string(algo);
      for (const auto& r : report.routes) out << ' ' << r;
      out << "\ncolors " << c.num_colors() << '\n';
      return kExitOk;
    }
    if (*verify) {
      TotalGraph g = parse_graph(read_file(graph_path));
      TotalColoring c = parse_coloring(read_file(coloring_path));
      TlirReport report = verify_tlir(g, c, !partial);
      if (!report.foreign.empty()) {
        for (const auto& f : report.foreign) err << "unknown element: " << f << '\n';
        return kExitParse;
      }
      if (report.valid()) {
        out << "VALID\n";
        return kExitOk;
      }
      print_violations(report, out);
      return kExitInvalid;
    }
    if (*oracle) {
      TotalGraph g = parse_graph(read_file(graph_path));
      SearchBudget b = oracle_budget.budget();
      if (mode == "acyclic") {
        AcyclicSearchResult r = exact_acyclic(g, b);
        if (r.status != SearchStatus::kFound) {
          out << "UNKNOWN\n";
          return kExitBudget;
        }
        out << r.value << '\n';
        return kExitOk;
      }
      TlirSearchResult r = mode == "lir" ? exact_lir(g, b) : exact_tlir(g, b);
      if (r.status == SearchStatus::kFound) {
        out << r.value << '\n';
        return kExitOk;
      }
      if (r.status == SearchStatus::kUncolorable) {
        out << "UNCOLORABLE\n";
        return kExitOk;
      }
      out << "UNKNOWN\n";
      return kExitBudget;
    }
    if (*gen_cmd) {
      spec.graph_class = parse_graph_class(class_name);
      TotalGraph g = gen(spec);
      if (!certified(g, spec.graph_class)) {
        err << "internal error: generated graph is not in class " << class_name << '\n';
        return kExitInvalid;
      }
      std::string text = serialize_graph(g);
      if (gen_out == "-")
        out << text;
      else
        write_file(gen_out, text);
      return kExitOk;
    }
    if (*sweep) {
      SweepResult r = sweep_parallel(n_max, jobs, sweep_budget.budget());
      std::vector<int> max_per_n(n_max + 1, 0);
      for (const SweepEntry& e : r.entries)
        if (e.status == SearchStatus::kFound) max_per_n[e.n] = std::max(max_per_n[e.n], e.value);
      std::size_t total = 0;
      for (std::size_t n = 1; n <= n_max; ++n) {
        out << "n " << n << " graphs " << r.graphs_per_n[n] << " max " << max_per_n[n] << '\n';
        total += r.graphs_per_n[n];
      }
      out << "graphs " << total << '\n';
      out << "max tlir observed = " << r.max_tlir << '\n';
      if (r.max_tlir > 2) return kExitInvalid;
      if (r.unresolved > 0) {
        out << "unresolved " << r.unresolved << '\n';
        return kExitBudget;
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitParse;
}

}  // namespace tlir
