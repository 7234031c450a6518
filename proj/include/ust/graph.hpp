#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ust/scalar.hpp"

namespace ust {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// An edge carries a conductance (weight); its resistance is 1/weight.
/// u == v makes it a self-edge.
struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Rational weight{1};

  bool is_self_edge() const { return u == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Edge plus direction. forward means stored u -> stored v.
struct OrientedEdge {
  EdgeId edge = 0;
  bool forward = true;

  OrientedEdge reversed() const { return {edge, !forward}; }
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

using EdgeSet = std::set<EdgeId>;

struct EdgeSpec {
  VertexId u = 0;
  VertexId v = 0;
  Rational weight{1};
};

struct Incidence {
  EdgeId edge;
  VertexId other;
};

/// Finite weighted multigraph. Immutable after construction; every
/// transformation returns a new Graph.
///
/// Edge ids are stable: build() numbers edges by list position, deletion
/// keeps the survivors' ids, and contraction keeps every id (the contracted
/// edge stays behind as a self-edge).
class Graph {
 public:
  Graph() = default;

  /// Throws Error(out_of_range) for bad endpoints and
  /// Error(invalid_argument) for non-positive weights.
  static Graph build(std::size_t vertex_count, std::span<const EdgeSpec> edges);

  /// Like build() but keeps the ids carried by `edges`, which must be
  /// distinct. Used when a transformation has to preserve edge identity.
  static Graph from_edges(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in increasing id order.
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;

  /// One entry per incident edge in id order; a self-edge appears once with
  /// other == v.
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }

  /// d(v): sum of incident weights, a self-edge counting twice.
  Rational degree(VertexId v) const;
  /// Number of incident edge ends (self-edges count 2).
  std::size_t edge_degree(VertexId v) const;

  VertexId tail(OrientedEdge e) const;
  VertexId head(OrientedEdge e) const;

  /// Oriented from lower to higher vertex id.
  OrientedEdge canonical_orientation(EdgeId id) const;

  bool is_connected() const;
  /// True when every non-self edge has weight 1.
  bool is_unweighted() const;

  /// Drops an edge without any connectivity check.
  Graph without_edge(EdgeId id) const;

  /// Edge list as EdgeSpecs in id order (ids are not carried).
  std::vector<EdgeSpec> edge_specs() const;

 private:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::ptrdiff_t> slot_;  // edge id -> index into edges_, -1 if gone
  std::vector<std::vector<Incidence>> adjacency_;
};

/// rho: old vertex -> new vertex. Edge ids are unchanged by contraction, so
/// edge_map is the identity on every id of the source graph.
struct ContractionMap {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

/// Removes e. Throws Error(disconnected) if the result is disconnected.
Graph delete_edge(const Graph& g, EdgeId e);

/// Merges the endpoints of e into the smaller vertex id and renumbers the
/// remaining vertices densely. e is kept as a self-edge at the merged vertex.
std::pair<Graph, ContractionMap> contract(const Graph& g, EdgeId e);

/// Brings every vertex up to the maximum degree D by adding one self-edge of
/// weight (D - k)/2 at each vertex of degree k < D. A self-edge counts twice
/// toward degree, so the added mass is exactly D - k. Spanning trees and
/// harmonic functions are unchanged.
Graph regularize(const Graph& g);

enum class Family { complete, torus, hypercube, path, cycle, grid };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Unweighted graph of the named family.
///   complete: K_n on n vertices.
///   torus: n x n discrete torus, vertex (i, j) = i + n*j, n >= 3; per vertex
///     in id order the edges to (i+1, j) then (i, j+1).
///   hypercube: bit strings of length n, edges flip one bit.
///   path / cycle: n vertices.
///   grid: n x n planar grid, vertex (i, j) = i + n*j; per vertex in id order
///     the edge to (i+1, j) then to (i, j+1) when present.
Graph make_family(Family family, int n);

/// |s| = |V| - 1, acyclic and connected. Self-edges never belong to a tree.
bool is_spanning_tree(const Graph& g, const EdgeSet& s);

/// True when the edges in `edges` contain a cycle (a self-edge counts).
bool contains_cycle(const Graph& g, std::span<const EdgeId> edges);

}  // namespace ust
