#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "expect_error.hpp"
#include "sphflex/coloring.hpp"
#include "sphflex/corpus.hpp"
#include "support.hpp"

using namespace sphflex;

namespace {

EdgeColoring color(const Graph& g, std::vector<std::pair<Vertex, Vertex>> red) {
  std::vector<Color> cs(g.num_edges(), Color::blue);
  for (auto [a, b] : red) cs[g.edge_index(a, b)] = Color::red;
  return EdgeColoring(g, cs);
}

// Vertex-1-red coloring of K3,3.
EdgeColoring k33_row() { return color(corpus::k33(), {{1, 2}, {1, 4}, {1, 6}}); }

}  // namespace

TEST(Surjective, Examples) {
  Graph t = corpus::triangle();
  EXPECT_FALSE(is_surjective(EdgeColoring(t, {Color::red, Color::red, Color::red})));
  EXPECT_TRUE(is_surjective(corpus::k32_figure_coloring()));
  EXPECT_FALSE(is_surjective(EdgeColoring(corpus::path(2), {Color::red})));
}

TEST(Nap, Examples) {
  EXPECT_TRUE(is_nap(corpus::k32_figure_coloring()));
  EXPECT_FALSE(is_nap(color(corpus::path(4), {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_nap(color(corpus::path(4), {{1, 2}, {2, 3}})));
  EXPECT_TRUE(is_nap(k33_row()));
  EXPECT_TRUE(is_nap(corpus::nap254_figure_coloring()));
}

TEST(Nac, Examples) {
  Graph c4 = corpus::k22();
  EXPECT_FALSE(is_nac(color(c4, {{1, 2}, {2, 3}, {3, 4}})));
  EXPECT_TRUE(is_nac(color(c4, {{1, 2}, {2, 3}})));
  for (const auto& c : enumerate_nap(corpus::k33(), false).colorings) EXPECT_TRUE(is_nac(c));
}

TEST(Nap, LocalCriterionMatchesPathScanOnSmallGraphs) {
  for (const Graph& g : oracle::connected_graphs(6)) {
    const std::uint64_t total = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t m = 0; m < total; ++m) {
      auto c = EdgeColoring::from_mask(g, m);
      ASSERT_EQ(is_nap(c), oracle::nap_by_path_scan(c));
    }
  }
}

TEST(Nac, UnionFindMatchesCycleListing) {
  for (const Graph& g : oracle::connected_graphs(7)) {
    const std::uint64_t total = std::uint64_t{1} << g.num_edges();
    for (std::uint64_t m = 0; m < total; ++m) {
      auto c = EdgeColoring::from_mask(g, m);
      ASSERT_EQ(is_nac(c), oracle::nac_by_cycles(c));
    }
  }
}

TEST(Nap, ImpliesNacOnAllSmallGraphs) {
  int checked = 0;
  for (const Graph& g : oracle::connected_graphs(8))
    for (const auto& c : enumerate_nap(g, false).colorings) {
      ASSERT_TRUE(is_nac(c));
      ++checked;
    }
  EXPECT_GT(checked, 0);
}

TEST(Nap, InvariantUnderSwapAndAutomorphism) {
  // Relabel K3,3 by swapping the sides 1<->2, 3<->4, 5<->6.
  Graph g = corpus::k33();
  for (std::uint64_t m = 0; m < 512; ++m) {
    auto c = EdgeColoring::from_mask(g, m);
    EXPECT_EQ(is_nap(c), is_nap(c.swapped()));
    std::vector<Color> moved(9);
    for (std::size_t e = 0; e < 9; ++e) {
      auto p = g.edges()[e];
      auto f = [](Vertex v) { return v % 2 ? v + 1 : v - 1; };
      moved[g.edge_index(f(p.a), f(p.b))] = c.at(static_cast<int>(e));
    }
    EXPECT_EQ(is_nap(c), is_nap(EdgeColoring(g, moved)));
  }
}

TEST(EnumerateNap, K33Counts) {
  EXPECT_EQ(enumerate_nap(corpus::k33(), true).colorings.size(), 6u);
  EXPECT_EQ(enumerate_nap(corpus::k33(), false).colorings.size(), 12u);
}

TEST(EnumerateNap, StarAndTriangle) {
  EXPECT_EQ(enumerate_nap(corpus::star(3), false).colorings.size(), 6u);
  EXPECT_TRUE(enumerate_nap(corpus::triangle(), false).colorings.empty());
}

TEST(EnumerateNap, ModuloSwapKeepsOnePerClass) {
  for (const Graph& g : oracle::connected_graphs(6)) {
    auto all = enumerate_nap(g, false).colorings;
    auto half = enumerate_nap(g, true).colorings;
    ASSERT_EQ(all.size(), 2 * half.size());
    for (std::size_t i = 0; i < half.size(); ++i)
      for (std::size_t j = i + 1; j < half.size(); ++j) ASSERT_FALSE(half[i] == half[j].swapped());
  }
}

TEST(EnumerateNap, BudgetExceeded) {
  std::vector<Vertex> vs;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int v = 1; v <= 27; ++v) {
    vs.push_back(v);
    if (v > 1) es.emplace_back(v - 1, v);
  }
  EXPECT_ERROR_CODE(enumerate_nap(Graph::build(vs, es), false), ErrorCode::BudgetExceeded);
}

TEST(Certificate, Examples) {
  auto k33 = flexibility_certificate(corpus::k33());
  ASSERT_TRUE(k33.has_value());
  EXPECT_TRUE(is_nap(*k33));
  EXPECT_FALSE(flexibility_certificate(corpus::triangle()).has_value());
  auto f = flexibility_certificate(corpus::nap254());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, corpus::nap254_figure_coloring());
}

TEST(Certificate, ExistsExactlyWhenEnumerationIsNonEmpty) {
  for (const Graph& g : oracle::connected_graphs(8)) {
    auto cert = flexibility_certificate(g);
    bool any = !enumerate_nap(g, true).colorings.empty();
    ASSERT_EQ(cert.has_value(), any);
    if (cert) {
      ASSERT_TRUE(is_nap(*cert));
    }
  }
}

TEST(PolePartition, Examples) {
  auto p = nap_pole_partition(k33_row());
  EXPECT_EQ(p.poles, (std::vector<Vertex>{2, 4, 6}));
  EXPECT_EQ(p.red_side, (std::vector<Vertex>{1}));
  EXPECT_EQ(p.blue_side, (std::vector<Vertex>{3, 5}));
  EXPECT_EQ(nap_pole_partition(corpus::k32_figure_coloring()).poles, (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(nap_pole_partition(color(corpus::star(3), {{1, 2}, {1, 3}})).poles, (std::vector<Vertex>{1}));
  EXPECT_ERROR_CODE(nap_pole_partition(color(corpus::path(4), {{1, 2}, {3, 4}})), ErrorCode::NotNap);
}

TEST(PolePartition, PolesAreIndependent) {
  for (const Graph& g : oracle::connected_graphs(7))
    for (const auto& c : enumerate_nap(g, true).colorings) {
      auto p = nap_pole_partition(c);
      for (Vertex a : p.poles)
        for (Vertex b : p.poles) ASSERT_TRUE(a == b || !g.has_edge(a, b));
      ASSERT_EQ(p.poles.size() + p.red_side.size() + p.blue_side.size(), g.num_vertices());
    }
}

TEST(Generator, ConnectedGraphCountsByEdges) {
  const std::vector<std::size_t> expected{1, 1, 3, 5, 12, 30, 79, 227};
  std::vector<std::size_t> got(8, 0);
  for (const Graph& g : sphflex::oracle::connected_graphs(8)) ++got[g.num_edges() - 1];
  EXPECT_EQ(got, expected);
}
