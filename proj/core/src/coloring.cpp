#include "sphflex/coloring.hpp"

#include <numeric>
#include <string>

#include "sphflex/error.hpp"

namespace sphflex {

Color opposite(Color c) { return c == Color::red ? Color::blue : Color::red; }

EdgeColoring::EdgeColoring(Graph g, std::vector<Color> colors)
    : graph_(std::move(g)), colors_(std::move(colors)) {
  if (colors_.size() != graph_.num_edges())
    fail(ErrorCode::ParseError, "coloring has " + std::to_string(colors_.size()) +
                                    " entries for " + std::to_string(graph_.num_edges()) +
                                    " edges");
}

EdgeColoring EdgeColoring::from_mask(const Graph& g, std::uint64_t blue_mask) {
  std::vector<Color> cs(g.num_edges());
  for (std::size_t e = 0; e < cs.size(); ++e)
    cs[e] = (blue_mask >> e & 1U) ? Color::blue : Color::red;
  return EdgeColoring(g, std::move(cs));
}

Color EdgeColoring::color(Vertex u, Vertex v) const {
  int e = graph_.edge_index(u, v);
  if (e < 0)
    fail(ErrorCode::UnknownVertex, "{" + std::to_string(u) + "," + std::to_string(v) +
                                       "} is not an edge");
  return colors_[e];
}

EdgeColoring EdgeColoring::swapped() const {
  std::vector<Color> cs(colors_);
  for (auto& c : cs) c = opposite(c);
  return EdgeColoring(graph_, std::move(cs));
}

bool EdgeColoring::operator==(const EdgeColoring& other) const {
  return graph_ == other.graph_ && colors_ == other.colors_;
}

bool is_surjective(const EdgeColoring& c) {
  bool red = false;
  bool blue = false;
  for (Color x : c.colors()) (x == Color::red ? red : blue) = true;
  return red && blue;
}

namespace {

bool monochromatic(const EdgeColoring& c, int vi) {
  const auto& inc = c.graph().incident_edges(vi);
  for (int e : inc)
    if (c.at(e) != c.at(inc.front())) return false;
  return true;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Bitmask form of the local NAP criterion, for enumeration.
class MaskChecker {
 public:
  explicit MaskChecker(const Graph& g) : incident_(g.num_vertices(), 0) {
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      for (int e : g.incident_edges(static_cast<int>(v))) incident_[v] |= std::uint64_t{1} << e;
    for (const auto& e : g.edges()) ends_.emplace_back(g.index_of(e.a), g.index_of(e.b));
    all_ = g.num_edges() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.num_edges()) - 1;
  }

  bool nap(std::uint64_t blue) const {
    if (blue == 0 || blue == all_) return false;
    for (const auto& [a, b] : ends_)
      if (!mono(a, blue) && !mono(b, blue)) return false;
    return true;
  }

 private:
  bool mono(int v, std::uint64_t blue) const {
    std::uint64_t hit = blue & incident_[v];
    return hit == 0 || hit == incident_[v];
  }

  std::vector<std::uint64_t> incident_;
  std::vector<std::pair<int, int>> ends_;
  std::uint64_t all_ = 0;
};

}  // namespace

bool is_nap(const EdgeColoring& c) {
  if (!is_surjective(c)) return false;
  const Graph& g = c.graph();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& pair = g.edges()[e];
    if (!monochromatic(c, g.index_of(pair.a)) && !monochromatic(c, g.index_of(pair.b)))
      return false;
  }
  return true;
}

bool is_nac(const EdgeColoring& c) {
  if (!is_surjective(c)) return false;
  const Graph& g = c.graph();
  for (Color x : {Color::red, Color::blue}) {
    UnionFind uf(g.num_vertices());
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (c.at(static_cast<int>(e)) == x)
        uf.unite(g.index_of(g.edges()[e].a), g.index_of(g.edges()[e].b));
    // An edge of the other color closing an x-path is a cycle with exactly one such edge.
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (c.at(static_cast<int>(e)) != x &&
          uf.find(g.index_of(g.edges()[e].a)) == uf.find(g.index_of(g.edges()[e].b)))
        return false;
  }
  return true;
}

ColoringSet enumerate_nap(const Graph& g, bool modulo_swap, std::size_t budget) {
  const std::size_t m = g.num_edges();
  if (m > budget || m > 63)
    fail(ErrorCode::BudgetExceeded, std::to_string(m) + " edges exceed the enumeration budget of " +
                                        std::to_string(budget));
  ColoringSet out;
  out.modulo_swap = modulo_swap;
  if (m == 0) return out;
  MaskChecker checker(g);
  const std::uint64_t total = std::uint64_t{1} << m;
  // Canonical representative under swap: first edge red, i.e. bit 0 clear.
  const std::uint64_t step = modulo_swap ? 2 : 1;
  for (std::uint64_t mask = 0; mask < total; mask += step)
    if (checker.nap(mask)) out.colorings.push_back(EdgeColoring::from_mask(g, mask));
  return out;
}

namespace {

std::optional<EdgeColoring> coloring_from_separator(const Graph& g, const std::vector<char>& in_t) {
  const std::size_t n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (in_t[s] || comp[s] >= 0) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (!in_t[y] && comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  if (count < 2) return std::nullopt;
  std::vector<Color> colors(g.num_edges());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    int a = g.index_of(g.edges()[e].a);
    int b = g.index_of(g.edges()[e].b);
    int side = in_t[a] ? comp[b] : comp[a];
    colors[e] = side == 0 ? Color::red : Color::blue;
  }
  EdgeColoring c(g, std::move(colors));
  if (c.at(0) == Color::blue) c = c.swapped();
  return c;
}

bool separator_search(const Graph& g, std::vector<char>& in_t, std::size_t start,
                      std::optional<EdgeColoring>& found) {
  for (std::size_t v = start; v < g.num_vertices(); ++v) {
    bool independent = true;
    for (int y : g.neighbors(static_cast<int>(v)))
      if (in_t[y]) {
        independent = false;
        break;
      }
    if (!independent) continue;
    in_t[v] = 1;
    found = coloring_from_separator(g, in_t);
    if (found || separator_search(g, in_t, v + 1, found)) return true;
    in_t[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<EdgeColoring> flexibility_certificate(const Graph& g) {
  if (g.num_vertices() < 3) return std::nullopt;
  std::vector<char> in_t(g.num_vertices(), 0);
  std::optional<EdgeColoring> found;
  separator_search(g, in_t, 0, found);
  return found;
}

PolePartition nap_pole_partition(const EdgeColoring& c) {
  if (!is_nap(c)) fail(ErrorCode::NotNap, "coloring is not a NAP-coloring");
  PolePartition out;
  const Graph& g = c.graph();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& inc = g.incident_edges(static_cast<int>(v));
    bool red = false;
    bool blue = false;
    for (int e : inc) (c.at(e) == Color::red ? red : blue) = true;
    Vertex label = g.vertices()[v];
    if (red && blue)
      out.poles.push_back(label);
    else if (red)
      out.red_side.push_back(label);
    else
      out.blue_side.push_back(label);
  }
  return out;
}

}  // namespace sphflex
