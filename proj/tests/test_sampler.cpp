#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "support.hpp"
#include "ust/error.hpp"
#include "ust/oracle.hpp"
#include "ust/sampler.hpp"
#include "ust/transfer.hpp"

using namespace ust;

namespace {

double chi_square_critical(std::size_t dof, double alpha) {
  return boost::math::quantile(boost::math::chi_squared(static_cast<double>(dof)), 1.0 - alpha);
}

double three_sigma(double p, std::uint64_t trials) { return 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(trials)); }

// Follows parent pointers from every vertex; all must reach the root.
bool reaches_root(const Graph& g, const DirectedSpanningTree& t) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId x = v;
    for (std::size_t steps = 0; x != t.root; ++steps) {
      if (steps > g.vertex_count() || !t.parent_edge[x]) return false;
      const OrientedEdge e = *t.parent_edge[x];
      if (g.tail(e) != x) return false;
      x = g.head(e);
    }
  }
  return !t.parent_edge[t.root];
}

}  // namespace

TEST(Sampler, WalkTraceFixture) {
  const Graph g = test::walk_figure_graph();
  const std::vector<VertexId> walk{0, 1, 5, 1, 2, 3, 0, 4};  // A B F B C D A E
  const DirectedSpanningTree t = first_entry_tree_from_vertices(g, walk);
  EXPECT_EQ(t.root, 0u);
  EXPECT_EQ(t.edges(), (EdgeSet{0, 7, 1, 2, 5}));  // BA, FB, CB, DC, EA
  EXPECT_TRUE(reaches_root(g, t));
  EXPECT_EQ(g.head(*t.parent_edge[5]), 1u);  // F -> B
  EXPECT_THROW(first_entry_tree_from_vertices(g, std::vector<VertexId>{0, 1, 5}), Error);
  EXPECT_THROW(first_entry_tree_from_vertices(g, std::vector<VertexId>{0, 2}), Error);
}

TEST(Sampler, Determinism) {
  const Graph g = test::g1();
  for (RngSeed seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL}) {
    EXPECT_EQ(aldous_broder(g, 0, seed).edges(), aldous_broder(g, 0, seed).edges());
  }
  EXPECT_EQ(sample_tree_census(g, 3000, 9, 0, 1), sample_tree_census(g, 3000, 9, 0, 4));
  EXPECT_EQ(sample_frequencies(g, 3000, 9, 2, 1), sample_frequencies(g, 3000, 9, 2, 3));
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Sampler, OutputsAreSpanningTrees) {
  std::uint64_t seed = 0;
  for (const Graph& g : test::random_corpus(100, 51, 8, true)) {
    for (int k = 0; k < 100; ++k) {
      const VertexId start = seed % g.vertex_count();
      const DirectedSpanningTree t = aldous_broder(g, start, ++seed);
      ASSERT_TRUE(is_spanning_tree(g, t.edges()));
      ASSERT_TRUE(reaches_root(g, t));
      ASSERT_EQ(t.root, start);
    }
  }
}

TEST(Sampler, SelfEdgesDoNotChangeTheLaw) {
  const Graph g = test::g1();
  const auto census = sample_tree_census(regularize(g), 22000, 77);
  ASSERT_EQ(census.size(), 11u);
  double chi2 = 0;
  for (const auto& [key, count] : census) chi2 += std::pow(static_cast<double>(count) - 2000.0, 2) / 2000.0;
  EXPECT_LT(chi2, chi_square_critical(10, 0.001));
}

TEST(Sampler, PathAndErrors) {
  const Graph path = make_family(Family::path, 4);
  const auto census = sample_tree_census(path, 50, 1);
  ASSERT_EQ(census.size(), 1u);
  EXPECT_EQ(census.begin()->second, 50u);
  const std::vector<EdgeSpec> split{{0, 1}, {2, 3}};
  EXPECT_THROW(aldous_broder(Graph::build(4, split), 0, 1), Error);
  EXPECT_THROW(aldous_broder(path, 9, 1), Error);
  EXPECT_THROW(sample_tree_census(make_family(Family::torus, 3), 10, 1), Error);
  EXPECT_THROW(sample_frequencies(path, 0, 1), Error);
}

TEST(SamplerStatistics, EdgeFrequencies) {
  const std::uint64_t trials = 30000;
  for (const auto& [id, f] : sample_frequencies(test::triangle(), trials, 5)) {
    EXPECT_NEAR(f, 2.0 / 3.0, three_sigma(2.0 / 3.0, trials)) << id;
  }
  const auto weighted = sample_frequencies(test::triangle(2), trials, 6);
  EXPECT_NEAR(weighted.at(0), 0.8, three_sigma(0.8, trials));
  const auto g1 = sample_frequencies(test::g1(), trials, 7);
  EXPECT_NEAR(g1.at(0), 8.0 / 11.0, three_sigma(8.0 / 11.0, trials));
  EXPECT_NEAR(g1.at(3), 7.0 / 11.0, three_sigma(7.0 / 11.0, trials));
}

TEST(SamplerStatistics, WeightedCensus) {
  const std::uint64_t trials = 30000;
  const auto census = sample_tree_census(test::triangle(2), trials, 8);
  const TreeEnumeration trees = enumerate_spanning_trees(test::triangle(2));
  double chi2 = 0;
  for (const EdgeSet& t : trees.trees) {
    Rational w = 1;
    for (EdgeId id : t) w *= test::triangle(2).edge(id).weight;
    const double expected = Rational(w / trees.total_weight).get_d() * static_cast<double>(trials);
    const auto it = census.find(canonical_tree_key(t));
    const double seen = it == census.end() ? 0.0 : static_cast<double>(it->second);
    chi2 += (seen - expected) * (seen - expected) / expected;
  }
  EXPECT_LT(chi2, chi_square_critical(trees.trees.size() - 1, 0.001));
}

TEST(SamplerStatistics, StartVertexIndependence) {
  const Graph g = test::g1();
  const std::uint64_t trials = 22000;
  const auto from_a = sample_tree_census(g, trials, 101, 0);
  const auto from_c = sample_tree_census(g, trials, 202, 2);
  // two-sample chi-square on equal sample sizes
  double chi2 = 0;
  for (const EdgeSet& t : enumerate_spanning_trees(g).trees) {
    const std::string key = canonical_tree_key(t);
    const double x = static_cast<double>(from_a.count(key) ? from_a.at(key) : 0);
    const double y = static_cast<double>(from_c.count(key) ? from_c.at(key) : 0);
    if (x + y > 0) chi2 += (x - y) * (x - y) / (x + y);
  }
  EXPECT_LT(chi2, chi_square_critical(10, 0.001));
}
