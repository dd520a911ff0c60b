#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace sphflex {

using Vertex = int;

// Unordered pair of distinct vertices, stored with a < b.
struct VertexPair {
  Vertex a = 0;
  Vertex b = 0;

  static VertexPair make(Vertex u, Vertex v);

  auto operator<=>(const VertexPair&) const = default;
};

// Immutable connected simple graph. Copies share storage.
class Graph {
 public:
  Graph();

  static Graph build(std::vector<Vertex> vertices,
                     const std::vector<std::pair<Vertex, Vertex>>& edges);

  const std::vector<Vertex>& vertices() const { return data_->vertices; }
  const std::vector<VertexPair>& edges() const { return data_->edges; }
  std::size_t num_vertices() const { return data_->vertices.size(); }
  std::size_t num_edges() const { return data_->edges.size(); }

  bool has_vertex(Vertex v) const { return index_of(v) >= 0; }
  bool has_edge(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

  // Position of v in vertices(), or -1.
  int index_of(Vertex v) const;
  // Position of {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  // Edge indices incident to the vertex at position vi.
  const std::vector<int>& incident_edges(int vi) const { return data_->incident[vi]; }
  // Vertex positions adjacent to the vertex at position vi.
  const std::vector<int>& neighbors(int vi) const { return data_->adjacent[vi]; }

  bool operator==(const Graph& other) const;

 private:
  struct Data {
    std::vector<Vertex> vertices;
    std::vector<VertexPair> edges;
    std::vector<std::vector<int>> incident;
    std::vector<std::vector<int>> adjacent;
  };
  std::shared_ptr<const Data> data_;
};

bool is_laman(const Graph& g);
// Checks every vertex subset; throws BudgetExceeded above 20 vertices.
bool is_laman_exhaustive(const Graph& g);

// |E| > 2|V| - 4: a flexible assignment must satisfy a relation among lengths.
bool exceeds_relation_bound(const Graph& g);

std::vector<VertexPair> nonedges(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);
Graph remove_vertices(const Graph& g, const std::vector<Vertex>& drop);

}  // namespace sphflex
