#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ust/graph.hpp"

namespace ust::test {

// A..E = 0..4; e1..e6 = ids 0..5 (AB, BC, CD, DE, AE, AD).
inline Graph g1() {
  const std::vector<EdgeSpec> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 3}};
  return Graph::build(5, edges);
}

// Corners A..D = 0..3, E (center left) = 4, F (center right) = 5.
inline Graph walk_figure_graph() {
  const std::vector<EdgeSpec> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {4, 0}, {4, 3}, {5, 1}, {5, 2}};
  return Graph::build(6, edges);
}

// Named vertices of the 3x3 torus: A = (0,0), B = (1,0), C = (0,1), D = (2,0), E = (0,2).
namespace t3 {
inline constexpr VertexId A = 0, B = 1, C = 3, D = 2, E = 6;
inline constexpr EdgeId BA = 0, CA = 1, DA = 4, EA = 13;
}  // namespace t3

inline Graph triangle(const Rational& w01 = 1) {
  const std::vector<EdgeSpec> edges{{0, 1, w01}, {1, 2}, {2, 0}};
  return Graph::build(3, edges);
}

// Random connected multigraph: a random spanning tree on 2..max_vertices
// vertices plus extra edges (parallel edges allowed, no self-edges), at most
// max_edges in total.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                    bool weighted = false) {
  std::uniform_int_distribution<std::size_t> nv(2, max_vertices);
  const std::size_t n = nv(rng);
  const std::vector<Rational> weights{ratio(1, 2), Rational(1), Rational(2), Rational(3)};
  std::uniform_int_distribution<std::size_t> pick_w(0, weights.size() - 1);
  auto weight = [&] { return weighted ? weights[pick_w(rng)] : Rational(1); };

  std::vector<EdgeSpec> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v, weight()});
  }
  std::uniform_int_distribution<std::size_t> extra(0, max_edges - edges.size());
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  for (std::size_t k = extra(rng); k > 0; --k) {
    std::size_t u = vertex(rng);
    std::size_t v = vertex(rng);
    while (v == u) v = vertex(rng);
    edges.push_back({u, v, weight()});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::build(n, edges);
}

inline std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_edges = 8,
                                        bool weighted = false) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_connected_graph(rng, 6, max_edges, weighted));
  return out;
}

}  // namespace ust::test
