#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "ust/error.hpp"
#include "ust/graph_io.hpp"
#include "ust/oracle.hpp"

using namespace ust;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::numeric;
}

}  // namespace

TEST(Graph, BuildG1) {
  const Graph g = test::g1();
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g.edge(5).u, 0u);
  EXPECT_EQ(g.edge(5).v, 3u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_TRUE(g.is_unweighted());
  EXPECT_EQ(g.degree(0), 3);
}

TEST(Graph, SingleVertexAndParallelEdges) {
  const Graph one = Graph::build(1, {});
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_TRUE(one.is_connected());

  const std::vector<EdgeSpec> parallel{{0, 1}, {0, 1}};
  const Graph multi = Graph::build(3, parallel);
  EXPECT_EQ(multi.edge_count(), 2u);
  EXPECT_FALSE(multi.is_connected());
  EXPECT_EQ(multi.incident(0).size(), 2u);
}

TEST(Graph, BuildRejectsBadInput) {
  const std::vector<EdgeSpec> out_of_range{{0, 3}};
  EXPECT_EQ(code_of([&] { Graph::build(3, out_of_range); }), ErrorCode::out_of_range);
  const std::vector<EdgeSpec> zero{{0, 1, Rational(0)}};
  EXPECT_EQ(code_of([&] { Graph::build(2, zero); }), ErrorCode::invalid_argument);
  const std::vector<EdgeSpec> negative{{0, 1, ratio(-1, 2)}};
  EXPECT_EQ(code_of([&] { Graph::build(2, negative); }), ErrorCode::invalid_argument);
}

TEST(Graph, SelfEdgeDegreeConvention) {
  const std::vector<EdgeSpec> edges{{0, 1}, {1, 1, Rational(3)}};
  const Graph g = Graph::build(2, edges);
  EXPECT_EQ(g.degree(1), 7);
  EXPECT_EQ(g.edge_degree(1), 3u);
  EXPECT_EQ(g.incident(1).size(), 2u);
}

TEST(Graph, DeleteKeepsIds) {
  const Graph g = test::g1();
  const Graph cycle = delete_edge(g, 5);
  EXPECT_EQ(cycle.edge_count(), 5u);
  EXPECT_FALSE(cycle.has_edge(5));
  EXPECT_TRUE(cycle.has_edge(4));
  for (VertexId v = 0; v < 5; ++v) EXPECT_EQ(cycle.edge_degree(v), 2u);
  EXPECT_EQ(matrix_tree_count(cycle), 5);

  const Graph path = delete_edge(test::triangle(), 1);
  EXPECT_TRUE(path.is_connected());
  EXPECT_EQ(path.edge_count(), 2u);

  const Graph single = make_family(Family::path, 2);
  EXPECT_EQ(code_of([&] { delete_edge(single, 0); }), ErrorCode::disconnected);
}

TEST(Graph, ContractG1AlongE4) {
  const Graph g = test::g1();
  const auto [h, map] = contract(g, 3);  // e4 = DE
  EXPECT_EQ(h.vertex_count(), 4u);
  EXPECT_EQ(h.edge_count(), 6u);
  EXPECT_TRUE(h.edge(3).is_self_edge());
  EXPECT_EQ(map.vertex_map[3], map.vertex_map[4]);
  // e5 = AE and e6 = AD become parallel
  const Edge& e5 = h.edge(4);
  const Edge& e6 = h.edge(5);
  EXPECT_EQ(std::minmax(e5.u, e5.v), std::minmax(e6.u, e6.v));
  for (EdgeId id = 0; id < 6; ++id) EXPECT_EQ(map.edge_map[id], id);
  EXPECT_EQ(enumerate_spanning_trees(h).trees.size(), 7u);
}

TEST(Graph, ContractTriangle) {
  const auto [h, map] = contract(test::triangle(), 0);
  EXPECT_EQ(h.vertex_count(), 2u);
  EXPECT_TRUE(h.edge(0).is_self_edge());
  EXPECT_EQ(std::minmax(h.edge(1).u, h.edge(1).v), std::minmax(h.edge(2).u, h.edge(2).v));
  EXPECT_EQ(code_of([&] { contract(h, 0); }), ErrorCode::self_edge);
}

TEST(Graph, ContractionIsBijectionOnTreesContainingEdge) {
  for (const Graph& g : test::random_corpus(60, 11)) {
    const TreeEnumeration all = enumerate_spanning_trees(g);
    for (const Edge& e : g.edges()) {
      if (e.is_self_edge()) continue;
      std::set<EdgeSet> expected;
      for (const EdgeSet& t : all.trees) {
        if (!t.contains(e.id)) continue;
        EdgeSet projected = t;
        projected.erase(e.id);
        expected.insert(projected);
      }
      const auto [h, map] = contract(g, e.id);
      std::set<EdgeSet> got;
      for (const EdgeSet& t : enumerate_spanning_trees(h).trees) got.insert(t);
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Graph, DeletionContractionCounts) {
  for (const Graph& g : test::random_corpus(80, 12, 8, true)) {
    const Rational total = matrix_tree_count(g);
    for (const Edge& e : g.edges()) {
      if (e.is_self_edge()) continue;
      const Graph minus = g.without_edge(e.id);
      const Rational deleted = minus.is_connected() ? matrix_tree_count(minus) : Rational(0);
      const Rational contracted = e.weight * matrix_tree_count(contract(g, e.id).first);
      EXPECT_EQ(total, deleted + contracted);
    }
  }
}

TEST(Graph, RegularizeG1) {
  const Graph g = test::g1();
  const Graph r = regularize(g);
  for (VertexId v = 0; v < r.vertex_count(); ++v) EXPECT_EQ(r.degree(v), 3) << "vertex " << v;
  EXPECT_EQ(r.edge_count(), 9u);  // B, C, E gain one self-edge each
  EXPECT_EQ(enumerate_spanning_trees(r).trees, enumerate_spanning_trees(g).trees);
}

TEST(Graph, RegularizeNoOpCases) {
  const Graph cycle = make_family(Family::cycle, 5);
  EXPECT_EQ(regularize(cycle).edge_count(), cycle.edge_count());
  EXPECT_EQ(regularize(Graph::build(1, {})).edge_count(), 0u);
}

TEST(Graph, RegularizePreservesTreeSets) {
  for (const Graph& g : test::random_corpus(50, 13)) {
    const Graph r = regularize(g);
    const Rational d = r.degree(0);
    for (VertexId v = 0; v < r.vertex_count(); ++v) EXPECT_EQ(r.degree(v), d);
    EXPECT_EQ(enumerate_spanning_trees(r).trees, enumerate_spanning_trees(g).trees);
  }
}

TEST(Graph, Families) {
  EXPECT_EQ(make_family(Family::complete, 4).edge_count(), 6u);
  const Graph t3 = make_family(Family::torus, 3);
  EXPECT_EQ(t3.vertex_count(), 9u);
  EXPECT_EQ(t3.edge_count(), 18u);
  const Graph t5 = make_family(Family::torus, 5);
  for (VertexId v = 0; v < t5.vertex_count(); ++v) EXPECT_EQ(t5.edge_degree(v), 4u);
  const Graph b3 = make_family(Family::hypercube, 3);
  EXPECT_EQ(b3.vertex_count(), 8u);
  EXPECT_EQ(b3.edge_count(), 12u);
  const Graph grid = make_family(Family::grid, 3);
  EXPECT_EQ(grid.vertex_count(), 9u);
  EXPECT_EQ(grid.edge_count(), 12u);
  EXPECT_EQ(make_family(Family::path, 4).edge_count(), 3u);
  EXPECT_EQ(make_family(Family::cycle, 4).edge_count(), 4u);
  EXPECT_EQ(code_of([] { make_family(Family::torus, 2); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_family(Family::complete, 0); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { parse_family("moebius"); }), ErrorCode::invalid_argument);
}

TEST(Graph, SpanningTreePredicate) {
  const Graph g = test::g1();
  EXPECT_TRUE(is_spanning_tree(g, {0, 1, 2, 3}));
  EXPECT_FALSE(is_spanning_tree(g, {0, 1, 2, 5}));  // E unreachable, cycle A-B-C-D
  EXPECT_FALSE(is_spanning_tree(g, {0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_spanning_tree(g, {0, 1, 2}));
}

TEST(GraphIo, ParsesFixturesAndFamilies) {
  const Graph g = parse_graph_text(
      R"({"vertices": 5, "edges": [{"u":0,"v":1},{"u":1,"v":2},{"u":2,"v":3},{"u":3,"v":4},{"u":0,"v":4},{"u":0,"v":3}]})");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  const Graph t = parse_graph_text(R"({"family":"torus","n":3})");
  EXPECT_EQ(t.vertex_count(), 9u);
  const Graph w = parse_graph_text(R"({"vertices":2,"edges":[{"u":0,"v":1,"w":"3/2"},{"u":0,"v":1,"w":0.25},{"u":1,"v":0,"w":"1e1"}]})");
  EXPECT_EQ(w.edge(0).weight, ratio(3, 2));
  EXPECT_EQ(w.edge(1).weight, ratio(1, 4));
  EXPECT_EQ(w.edge(2).weight, 10);
  EXPECT_EQ(parse_graph_text(graph_to_json(w).dump()).edge(0).weight, ratio(3, 2));
}

TEST(GraphIo, ErrorsNameTheField) {
  auto message = [](const char* text) {
    try {
      parse_graph_text(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message(R"({"vertices":2,"edges":[{"u":0,"v":1,"w":"0"}]})").find("edges[0].w"), std::string::npos);
  EXPECT_NE(message(R"({"vertices":2,"edges":[{"u":0,"v":1},{"u":0,"v":1,"w":"x"}]})").find("edges[1].w"),
            std::string::npos);
  EXPECT_NE(message(R"({"vertices":2,"edges":[{"u":0}]})").find("edges[0].v"), std::string::npos);
  EXPECT_NE(message(R"({"vertices":2,)").find("byte"), std::string::npos);
}
