#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sphflex::oracle {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList relabel(const EdgeList& es, const std::vector<int>& perm) {
  EdgeList out;
  for (auto [a, b] : es) {
    int x = perm[a];
    int y = perm[b];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest relabeled edge list over orderings that respect a degree-based refinement.
EdgeList canonical(int n, const EdgeList& es) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : es) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> key(n);
  for (int v = 0; v < n; ++v) {
    key[v].push_back(static_cast<int>(adj[v].size()));
    std::vector<int> nd;
    for (int u : adj[v]) nd.push_back(static_cast<int>(adj[u].size()));
    std::sort(nd.begin(), nd.end());
    key[v].insert(key[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && key[order[j]] == key[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  EdgeList best;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> perm(n);
      for (int pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
      EdgeList cand = relabel(es, perm);
      if (!have || cand < best) {
        best = cand;
        have = true;
      }
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int max_edges) {
  std::vector<Graph> out;
  std::set<std::pair<int, EdgeList>> layer{{2, {{0, 1}}}};
  for (int m = 1; m <= max_edges; ++m) {
    std::set<std::pair<int, EdgeList>> next;
    for (const auto& [n, es] : layer) {
      std::vector<Vertex> vs;
      for (int v = 0; v < n; ++v) vs.push_back(v + 1);
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (auto [a, b] : es) pairs.emplace_back(a + 1, b + 1);
      out.push_back(Graph::build(vs, pairs));
      if (m == max_edges) continue;
      std::set<std::pair<int, int>> present(es.begin(), es.end());
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!present.count({a, b})) {
            EdgeList more = es;
            more.emplace_back(a, b);
            next.insert({n, canonical(n, more)});
          }
      for (int a = 0; a < n; ++a) {
        EdgeList more = es;
        more.emplace_back(a, n);
        next.insert({n + 1, canonical(n + 1, more)});
      }
    }
    layer = std::move(next);
  }
  return out;
}

bool nap_by_path_scan(const EdgeColoring& c) {
  if (!is_surjective(c)) return false;
  const Graph& g = c.graph();
  const auto& es = g.edges();
  for (std::size_t mid = 0; mid < es.size(); ++mid) {
    int w = g.index_of(es[mid].a);
    int z = g.index_of(es[mid].b);
    Color y = c.at(static_cast<int>(mid));
    for (auto [from, to] : {std::pair{w, z}, std::pair{z, w}})
      for (int e1 : g.incident_edges(from)) {
        if (e1 == static_cast<int>(mid) || c.at(e1) == y) continue;
        for (int e3 : g.incident_edges(to))
          if (e3 != static_cast<int>(mid) && e3 != e1 && c.at(e3) == c.at(e1)) return false;
      }
  }
  return true;
}

bool nac_by_cycles(const EdgeColoring& c) {
  if (!is_surjective(c)) return false;
  const Graph& g = c.graph();
  const int n = static_cast<int>(g.num_vertices());
  bool ok = true;
  std::vector<int> path;
  std::vector<bool> on(n, false);
  // Cycles rooted at their smallest vertex.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int u : g.neighbors(v)) {
      if (u == root && path.size() >= 3) {
        int red = 0;
        int blue = 0;
        for (std::size_t k = 0; k < path.size(); ++k) {
          int a = path[k];
          int b = path[(k + 1) % path.size()];
          (c.color(g.vertices()[a], g.vertices()[b]) == Color::red ? red : blue)++;
        }
        if (red == 1 || blue == 1) ok = false;
      }
      if (u <= root || on[u]) continue;
      on[u] = true;
      path.push_back(u);
      dfs(root, u);
      path.pop_back();
      on[u] = false;
    }
  };
  for (int r = 0; r < n && ok; ++r) {
    path = {r};
    on.assign(n, false);
    on[r] = true;
    dfs(r, r);
  }
  return ok;
}

std::vector<std::uint64_t> brute_force_nap_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t m = 0; m < total; ++m)
    if (nap_by_path_scan(EdgeColoring::from_mask(g, m))) out.push_back(m);
  return out;
}

}  // namespace sphflex::oracle
