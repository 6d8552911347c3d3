#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tlir/coloring.hpp"
#include "tlir/graph.hpp"
#include "tlir/oracle.hpp"

namespace tlir {

enum class Algo {
  kAuto,
  kBipartite,
  kCactus,
  kSubcubic,
  kSplit,
  kChromatic,
  kOuterplanar,
  kPlanar,
  kOracle,
};

Algo parse_algo(const std::string& name);
std::string to_string(Algo a);

/// Which construction colored each component under kAuto, in component order.
struct ColorReport {
  std::vector<std::string> routes;
};

/// Runs the chosen construction. kAuto colors each component with the class
/// of smallest guaranteed bound: bipartite, cactus, subcubic, regular, split
/// (2), outerplanar (3), chromatic when 2*chi - 2 <= 4, planar (5), chromatic,
/// and the exact oracle when some vertex is empty. Exceptions propagate.
TotalColoring color_graph(const TotalGraph& g, Algo algo, const SearchBudget& budget = {},
                          ColorReport* report = nullptr);

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitBudget = 4,
};

/// The `tlir` command line: color, verify, oracle, gen, sweep. argv[0] is the
/// program name. Never throws; returns an ExitCode.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace tlir
