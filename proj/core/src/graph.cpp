#include "sphflex/graph.hpp"

#include <algorithm>
#include <string>

#include "sphflex/error.hpp"

namespace sphflex {

VertexPair VertexPair::make(Vertex u, Vertex v) {
  if (u == v) fail(ErrorCode::SelfLoop, "pair of identical vertices " + std::to_string(u));
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph Graph::build(std::vector<Vertex> vertices,
                   const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    fail(ErrorCode::ParseError, "duplicate vertex label");
  if (vertices.empty()) fail(ErrorCode::Disconnected, "graph has no vertices");
  for (Vertex v : vertices)
    if (v < 0) fail(ErrorCode::UnknownVertex, "negative vertex label " + std::to_string(v));

  auto data = std::make_shared<Data>();
  data->vertices = vertices;
  auto pos = [&](Vertex v) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
      fail(ErrorCode::UnknownVertex, "edge endpoint " + std::to_string(v) + " is not a vertex");
    return static_cast<int>(it - vertices.begin());
  };

  for (const auto& [u, v] : edges) {
    pos(u);
    pos(v);
    if (u == v) fail(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    data->edges.push_back(VertexPair::make(u, v));
  }
  std::sort(data->edges.begin(), data->edges.end());
  auto dup = std::adjacent_find(data->edges.begin(), data->edges.end());
  if (dup != data->edges.end())
    fail(ErrorCode::DuplicateEdge,
         "edge {" + std::to_string(dup->a) + "," + std::to_string(dup->b) + "} repeated");

  const std::size_t n = vertices.size();
  data->incident.assign(n, {});
  data->adjacent.assign(n, {});
  for (std::size_t e = 0; e < data->edges.size(); ++e) {
    int a = pos(data->edges[e].a);
    int b = pos(data->edges[e].b);
    data->incident[a].push_back(static_cast<int>(e));
    data->incident[b].push_back(static_cast<int>(e));
    data->adjacent[a].push_back(b);
    data->adjacent[b].push_back(a);
  }

  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : data->adjacent[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) fail(ErrorCode::Disconnected, "graph is not connected");

  Graph g;
  g.data_ = std::move(data);
  return g;
}

int Graph::index_of(Vertex v) const {
  const auto& vs = data_->vertices;
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) return -1;
  return static_cast<int>(it - vs.begin());
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v) return -1;
  VertexPair p = u < v ? VertexPair{u, v} : VertexPair{v, u};
  const auto& es = data_->edges;
  auto it = std::lower_bound(es.begin(), es.end(), p);
  if (it == es.end() || *it != p) return -1;
  return static_cast<int>(it - es.begin());
}

bool Graph::operator==(const Graph& other) const {
  return vertices() == other.vertices() && edges() == other.edges();
}

namespace {

// (2,3)-pebble game.
class PebbleGame {
 public:
  explicit PebbleGame(std::size_t n) : pebbles_(n, 2), out_(n) {}

  bool insert(int u, int v) {
    while (pebbles_[u] < 2)
      if (!gather(u, v)) return false;
    while (pebbles_[v] < 2)
      if (!gather(v, u)) return false;
    --pebbles_[u];
    out_[u].push_back(v);
    return true;
  }

 private:
  bool gather(int target, int blocked) {
    std::vector<char> visited(pebbles_.size(), 0);
    visited[target] = 1;
    visited[blocked] = 1;
    return search(target, visited, target);
  }

  bool search(int x, std::vector<char>& visited, int root) {
    for (std::size_t k = 0; k < out_[x].size(); ++k) {
      int y = out_[x][k];
      if (visited[y]) continue;
      visited[y] = 1;
      bool found = pebbles_[y] > 0;
      if (found)
        --pebbles_[y];
      else
        found = search(y, visited, root);
      if (found) {
        out_[x].erase(out_[x].begin() + static_cast<std::ptrdiff_t>(k));
        out_[y].push_back(x);
        if (x == root) ++pebbles_[x];
        return true;
      }
    }
    return false;
  }

  std::vector<int> pebbles_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

bool is_laman(const Graph& g) {
  const long n = static_cast<long>(g.num_vertices());
  if (static_cast<long>(g.num_edges()) != 2 * n - 3) return false;
  PebbleGame game(g.num_vertices());
  for (const auto& e : g.edges())
    if (!game.insert(g.index_of(e.a), g.index_of(e.b))) return false;
  return true;
}

bool is_laman_exhaustive(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 20) fail(ErrorCode::BudgetExceeded, "exhaustive Laman check limited to 20 vertices");
  if (static_cast<long>(g.num_edges()) != 2 * static_cast<long>(n) - 3) return false;
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(g.index_of(e.a), g.index_of(e.b));
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    int k = __builtin_popcountl(mask);
    if (k < 2) continue;
    int inside = 0;
    for (const auto& [a, b] : ends)
      if ((mask >> a & 1UL) && (mask >> b & 1UL)) ++inside;
    if (inside > 2 * k - 3) return false;
  }
  return true;
}

bool exceeds_relation_bound(const Graph& g) {
  return static_cast<long>(g.num_edges()) > 2 * static_cast<long>(g.num_vertices()) - 4;
}

std::vector<VertexPair> nonedges(const Graph& g) {
  std::vector<VertexPair> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) out.push_back({vs[i], vs[j]});
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  for (Vertex v : keep)
    if (!g.has_vertex(v)) fail(ErrorCode::UnknownVertex, std::to_string(v) + " is not a vertex");
  std::vector<Vertex> kept(keep);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : g.edges())
    if (std::binary_search(kept.begin(), kept.end(), e.a) &&
        std::binary_search(kept.begin(), kept.end(), e.b))
      es.emplace_back(e.a, e.b);
  return Graph::build(kept, es);
}

Graph remove_vertices(const Graph& g, const std::vector<Vertex>& drop) {
  std::vector<Vertex> keep;
  for (Vertex v : g.vertices())
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace sphflex
