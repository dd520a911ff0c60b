#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphflex/coloring.hpp"
#include "sphflex/graph.hpp"

namespace sphflex::corpus {

Graph triangle();
Graph k4();
// 4-cycle 1-2-3-4.
Graph k22();
// Sides {1,3,5} and {2,4}.
Graph k32();
// Sides {1,3,5} and {2,4,6}.
Graph k33();
// Sides {1,3,5,7} and {2,4,6,8}.
Graph k44();
// Triangle 1,2,3 and 2,3,4 glued along 23, plus 5 joined to 1 and 4.
Graph nap254();
// Triangles 1,2,3 and 4,5,6 joined by 14, 25, 36.
Graph prism3();
// Centre 1, leaves 2..n+1.
Graph star(int leaves);
// 1-2-...-n.
Graph path(int n);

// The K3,2 coloring with the edges at 2 red and those at 4 blue.
EdgeColoring k32_figure_coloring();
// 12, 13, 23, 24, 34 red; 15, 45 blue.
EdgeColoring nap254_figure_coloring();

// Named graphs used by the verification suite.
std::vector<std::pair<std::string, Graph>> named_graphs();
// Looks up a name from named_graphs(); throws ParseError if unknown.
Graph by_name(const std::string& name);

}  // namespace sphflex::corpus
