#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sphflex/graph.hpp"

namespace sphflex {

enum class Color : std::uint8_t { red = 0, blue = 1 };

Color opposite(Color c);

// Total red/blue coloring of the edges of a graph, indexed like g.edges().
class EdgeColoring {
 public:
  EdgeColoring(Graph g, std::vector<Color> colors);

  // Bit e of blue_mask set means edge e is blue.
  static EdgeColoring from_mask(const Graph& g, std::uint64_t blue_mask);

  const Graph& graph() const { return graph_; }
  const std::vector<Color>& colors() const { return colors_; }
  Color at(int edge_index) const { return colors_[edge_index]; }
  Color color(Vertex u, Vertex v) const;

  EdgeColoring swapped() const;

  bool operator==(const EdgeColoring& other) const;

 private:
  Graph graph_;
  std::vector<Color> colors_;
};

struct ColoringSet {
  std::vector<EdgeColoring> colorings;
  bool modulo_swap = false;
};

bool is_surjective(const EdgeColoring& c);
bool is_nap(const EdgeColoring& c);
bool is_nac(const EdgeColoring& c);

inline constexpr std::size_t kDefaultEnumerationBudget = 25;

// All NAP-colorings in increasing mask order; with modulo_swap only those whose
// first edge is red.
ColoringSet enumerate_nap(const Graph& g, bool modulo_swap,
                          std::size_t budget = kDefaultEnumerationBudget);

// Searches independent vertex separators; a NAP-coloring exists iff one does.
// The returned coloring has its first edge red.
std::optional<EdgeColoring> flexibility_certificate(const Graph& g);

struct PolePartition {
  std::vector<Vertex> poles;  // incident to both colors
  std::vector<Vertex> red_side;
  std::vector<Vertex> blue_side;
};

PolePartition nap_pole_partition(const EdgeColoring& c);

}  // namespace sphflex
