#include "sphflex/corpus.hpp"

#include "sphflex/error.hpp"

namespace sphflex::corpus {

namespace {

Graph bipartite(const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  std::vector<Vertex> vs = left;
  vs.insert(vs.end(), right.begin(), right.end());
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex a : left)
    for (Vertex b : right) es.emplace_back(a, b);
  return Graph::build(vs, es);
}

EdgeColoring color_by(const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& red) {
  std::vector<Color> colors(g.num_edges(), Color::blue);
  for (const auto& [a, b] : red) {
    int e = g.edge_index(a, b);
    if (e < 0) fail(ErrorCode::UnknownVertex, "edge not in graph");
    colors[e] = Color::red;
  }
  return EdgeColoring(g, colors);
}

}  // namespace

Graph triangle() { return Graph::build({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}); }

Graph k4() { return Graph::build({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Graph k22() { return bipartite({1, 3}, {2, 4}); }

Graph k32() { return bipartite({1, 3, 5}, {2, 4}); }

Graph k33() { return bipartite({1, 3, 5}, {2, 4, 6}); }

Graph k44() { return bipartite({1, 3, 5, 7}, {2, 4, 6, 8}); }

Graph nap254() {
  return Graph::build({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {4, 5}});
}

Graph prism3() {
  return Graph::build({1, 2, 3, 4, 5, 6},
                      {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {2, 5}, {3, 6}});
}

Graph star(int leaves) {
  if (leaves < 1) fail(ErrorCode::OutOfRange, "a star needs a leaf");
  std::vector<Vertex> vs{1};
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int k = 2; k <= leaves + 1; ++k) {
    vs.push_back(k);
    es.emplace_back(1, k);
  }
  return Graph::build(vs, es);
}

Graph path(int n) {
  if (n < 2) fail(ErrorCode::OutOfRange, "a path needs two vertices");
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int k = 1; k <= n; ++k) {
    vs.push_back(k);
    if (k > 1) es.emplace_back(k - 1, k);
  }
  return Graph::build(vs, es);
}

EdgeColoring k32_figure_coloring() { return color_by(k32(), {{1, 2}, {3, 2}, {5, 2}}); }

EdgeColoring nap254_figure_coloring() {
  return color_by(nap254(), {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

std::vector<std::pair<std::string, Graph>> named_graphs() {
  return {{"k3", triangle()},     {"k4", k4()},         {"k22", k22()},
          {"k32", k32()},         {"k33", k33()},       {"nap254", nap254()},
          {"prism3", prism3()},   {"star3", star(3)},   {"path4", path(4)}};
}

Graph by_name(const std::string& name) {
  for (auto& [n, g] : named_graphs())
    if (n == name) return g;
  if (name == "k44") return k44();
  fail(ErrorCode::ParseError, "unknown graph name '" + name + "'");
}

}  // namespace sphflex::corpus
