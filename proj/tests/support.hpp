#pragma once

#include <vector>

#include "sphflex/coloring.hpp"
#include "sphflex/graph.hpp"

namespace sphflex::oracle {

// Every connected simple graph with 1..max_edges edges, one per isomorphism class.
std::vector<Graph> connected_graphs(int max_edges);

// NAP by scanning all walks of three distinct edges colored X, Y, X.
bool nap_by_path_scan(const EdgeColoring& c);

// NAC by listing every simple cycle.
bool nac_by_cycles(const EdgeColoring& c);

// All colorings (as blue masks) satisfying nap_by_path_scan.
std::vector<std::uint64_t> brute_force_nap_masks(const Graph& g);

}  // namespace sphflex::oracle
