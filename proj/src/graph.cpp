#include "ust/graph.hpp"

#include <algorithm>
#include <string>

#include "ust/detail/union_find.hpp"
#include "ust/error.hpp"

namespace ust {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  EdgeId max_id = 0;
  for (const Edge& e : edges_) max_id = std::max(max_id, e.id);
  slot_.assign(edges_.empty() ? 0 : max_id + 1, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    slot_[e.id] = static_cast<std::ptrdiff_t>(i);
    adjacency_[e.u].push_back({e.id, e.v});
    if (!e.is_self_edge()) adjacency_[e.v].push_back({e.id, e.u});
  }
}

Graph Graph::build(std::size_t vertex_count, std::span<const EdgeSpec> specs) {
  std::vector<Edge> edges;
  edges.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const EdgeSpec& s = specs[i];
    if (s.u >= vertex_count || s.v >= vertex_count) {
      throw Error(ErrorCode::out_of_range,
                  "edge " + std::to_string(i) + " has an endpoint outside [0, " +
                      std::to_string(vertex_count) + ")");
    }
    if (sgn(s.weight) <= 0) {
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(i) + " has non-positive weight " +
                      format_rational(s.weight));
    }
    Rational w = s.weight;
    w.canonicalize();
    edges.push_back({i, s.u, s.v, w});
  }
  return Graph(vertex_count, std::move(edges));
}

Graph Graph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  std::vector<char> seen;
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::out_of_range,
                  "edge " + std::to_string(e.id) + " has an endpoint out of range");
    }
    if (sgn(e.weight) <= 0) {
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(e.id) + " has non-positive weight");
    }
    if (e.id >= seen.size()) seen.resize(e.id + 1, 0);
    if (seen[e.id]) {
      throw Error(ErrorCode::invalid_argument, "duplicate edge id " + std::to_string(e.id));
    }
    seen[e.id] = 1;
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  return Graph(vertex_count, std::move(edges));
}

bool Graph::has_edge(EdgeId id) const { return id < slot_.size() && slot_[id] >= 0; }

const Edge& Graph::edge(EdgeId id) const {
  if (!has_edge(id)) {
    throw Error(ErrorCode::out_of_range, "no edge with id " + std::to_string(id));
  }
  return edges_[static_cast<std::size_t>(slot_[id])];
}

Rational Graph::degree(VertexId v) const {
  Rational d = 0;
  for (const Incidence& inc : adjacency_[v]) {
    const Edge& e = edge(inc.edge);
    d += e.is_self_edge() ? Rational(2 * e.weight) : e.weight;
  }
  return d;
}

std::size_t Graph::edge_degree(VertexId v) const {
  std::size_t d = 0;
  for (const Incidence& inc : adjacency_[v]) d += inc.other == v ? 2 : 1;
  return d;
}

VertexId Graph::tail(OrientedEdge e) const {
  const Edge& ed = edge(e.edge);
  return e.forward ? ed.u : ed.v;
}

VertexId Graph::head(OrientedEdge e) const {
  const Edge& ed = edge(e.edge);
  return e.forward ? ed.v : ed.u;
}

OrientedEdge Graph::canonical_orientation(EdgeId id) const {
  const Edge& e = edge(id);
  return {id, e.u <= e.v};
}

bool Graph::is_connected() const {
  if (vertex_count_ <= 1) return true;
  detail::UnionFind uf(vertex_count_);
  for (const Edge& e : edges_) uf.unite(e.u, e.v);
  return uf.components() == 1;
}

bool Graph::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.is_self_edge() || e.weight == 1; });
}

Graph Graph::without_edge(EdgeId id) const {
  edge(id);  // validates
  std::vector<Edge> kept;
  kept.reserve(edges_.size() - 1);
  for (const Edge& e : edges_) {
    if (e.id != id) kept.push_back(e);
  }
  return Graph(vertex_count_, std::move(kept));
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({e.u, e.v, e.weight});
  return out;
}

Graph delete_edge(const Graph& g, EdgeId e) {
  Graph h = g.without_edge(e);
  if (!h.is_connected()) {
    throw Error(ErrorCode::disconnected,
                "deleting edge " + std::to_string(e) + " disconnects the graph");
  }
  return h;
}

std::pair<Graph, ContractionMap> contract(const Graph& g, EdgeId id) {
  const Edge& target = g.edge(id);
  if (target.is_self_edge()) {
    throw Error(ErrorCode::self_edge,
                "cannot contract self-edge " + std::to_string(id));
  }
  const VertexId keep = std::min(target.u, target.v);
  const VertexId drop = std::max(target.u, target.v);

  ContractionMap map;
  map.vertex_map.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (v == drop) {
      map.vertex_map[v] = keep;
    } else {
      map.vertex_map[v] = v > drop ? v - 1 : v;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edges.push_back({e.id, map.vertex_map[e.u], map.vertex_map[e.v], e.weight});
    map.edge_map.resize(std::max(map.edge_map.size(), e.id + 1));
    map.edge_map[e.id] = e.id;
  }

  return {Graph::from_edges(g.vertex_count() - 1, std::move(edges)), std::move(map)};
}

Graph regularize(const Graph& g) {
  std::vector<std::size_t> degrees(g.vertex_count());
  std::size_t target = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    degrees[v] = g.edge_degree(v);
    target = std::max(target, degrees[v]);
  }

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  EdgeId next_id = 0;
  for (const Edge& e : edges) next_id = std::max(next_id, e.id + 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (degrees[v] < target) {
      edges.push_back({next_id++, v, v, ratio(static_cast<long>(target - degrees[v]), 2)});
      edges.back().weight.canonicalize();
    }
  }
  return Graph::from_edges(g.vertex_count(), std::move(edges));
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "torus") return Family::torus;
  if (name == "hypercube") return Family::hypercube;
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "grid") return Family::grid;
  throw Error(ErrorCode::invalid_argument, "unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::torus: return "torus";
    case Family::hypercube: return "hypercube";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::grid: return "grid";
  }
  return "unknown";
}

Graph make_family(Family family, int n) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      throw Error(ErrorCode::invalid_argument,
                  std::string(family_name(family)) + ": " + what + " (got n=" +
                      std::to_string(n) + ")");
    }
  };
  require(n >= 1, "n must be >= 1");

  const auto un = static_cast<std::size_t>(n);
  std::vector<EdgeSpec> edges;
  std::size_t vertices = 0;
  switch (family) {
    case Family::complete:
      vertices = un;
      for (std::size_t i = 0; i < un; ++i) {
        for (std::size_t j = i + 1; j < un; ++j) edges.push_back({i, j});
      }
      break;
    case Family::torus:
      require(n >= 3, "torus needs n >= 3");
      vertices = un * un;
      for (std::size_t j = 0; j < un; ++j) {
        for (std::size_t i = 0; i < un; ++i) {
          const std::size_t v = i + un * j;
          edges.push_back({v, (i + 1) % un + un * j});
          edges.push_back({v, i + un * ((j + 1) % un)});
        }
      }
      break;
    case Family::hypercube:
      require(n <= 20, "hypercube dimension must be <= 20");
      vertices = std::size_t{1} << un;
      for (std::size_t v = 0; v < vertices; ++v) {
        for (std::size_t bit = 0; bit < un; ++bit) {
          const std::size_t w = v ^ (std::size_t{1} << bit);
          if (v < w) edges.push_back({v, w});
        }
      }
      break;
    case Family::path:
      vertices = un;
      for (std::size_t i = 0; i + 1 < un; ++i) edges.push_back({i, i + 1});
      break;
    case Family::cycle:
      require(n >= 3, "cycle needs n >= 3");
      vertices = un;
      for (std::size_t i = 0; i < un; ++i) edges.push_back({i, (i + 1) % un});
      break;
    case Family::grid:
      vertices = un * un;
      for (std::size_t j = 0; j < un; ++j) {
        for (std::size_t i = 0; i < un; ++i) {
          const std::size_t v = i + un * j;
          if (i + 1 < un) edges.push_back({v, v + 1});
          if (j + 1 < un) edges.push_back({v, v + un});
        }
      }
      break;
  }
  return Graph::build(vertices, edges);
}

bool contains_cycle(const Graph& g, std::span<const EdgeId> edges) {
  detail::UnionFind uf(g.vertex_count());
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (!uf.unite(e.u, e.v)) return true;
  }
  return false;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& s) {
  if (s.size() + 1 != g.vertex_count()) return false;
  for (EdgeId id : s) {
    if (!g.has_edge(id)) return false;
  }
  std::vector<EdgeId> ids(s.begin(), s.end());
  // |V| - 1 acyclic edges on |V| vertices are automatically connected.
  return !contains_cycle(g, ids);
}

}  // namespace ust
