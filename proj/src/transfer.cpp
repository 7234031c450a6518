#include "ust/transfer.hpp"

#include <bit>
#include <string>

#include "ust/error.hpp"

namespace ust {

namespace {

constexpr double kClampBelow = 1e-12;

const Graph& require_unweighted(const Graph& g) {
  if (!g.is_unweighted()) {
    throw Error(ErrorCode::invalid_argument,
                "transfer-impedance determinants need unit weights; use the weighted recursion");
  }
  return g;
}

VertexId pick_ground(const Graph& g) { return g.vertex_count() == 0 ? 0 : g.vertex_count() - 1; }

template <Scalar T>
T clamp_probability(T p) {
  if constexpr (!ScalarTraits<T>::exact) {
    if (p < 0.0 && p > -kClampBelow) return 0.0;
  }
  return p;
}

void validate_event(const Graph& g, const CylinderEvent& ev) {
  for (EdgeId id : ev.include) {
    g.edge(id);
    if (ev.exclude.contains(id)) {
      throw Error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(id) + " is both included and excluded");
    }
  }
  for (EdgeId id : ev.exclude) g.edge(id);
}

}  // namespace

template <Scalar T>
TransferKernel<T>::TransferKernel(const Graph& g)
    : graph_(require_unweighted(g)), green_(graph_, pick_ground(graph_)) {}

template <Scalar T>
T TransferKernel<T>::impedance(OrientedEdge e, OrientedEdge f) const {
  if (graph_.edge(e.edge).is_self_edge() || graph_.edge(f.edge).is_self_edge()) {
    throw Error(ErrorCode::self_edge, "transfer impedance is undefined for self-edges");
  }
  const VertexId x = graph_.tail(e);
  const VertexId y = graph_.head(e);
  const VertexId z = graph_.tail(f);
  const VertexId w = graph_.head(f);
  return green_.flow_potential(x, y, z) - green_.flow_potential(x, y, w);
}

template <Scalar T>
TransferMatrix<T> TransferKernel<T>::matrix(const std::vector<OrientedEdge>& edges) const {
  TransferMatrix<T> out;
  out.edges = edges;
  out.entries = Matrix<T>(edges.size(), edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) out.entries(i, j) = impedance(edges[i], edges[j]);
  }
  return out;
}

template <Scalar T>
T TransferKernel<T>::prob_edges_in(const std::vector<EdgeId>& edges) const {
  CylinderEvent ev;
  ev.include.insert(edges.begin(), edges.end());
  if (ev.include.size() != edges.size()) {
    throw Error(ErrorCode::invalid_argument, "edge list has duplicates");
  }
  return prob_cylinder(ev);
}

template <Scalar T>
T TransferKernel<T>::prob_cylinder(const CylinderEvent& ev) const {
  validate_event(graph_, ev);
  std::vector<EdgeId> include(ev.include.begin(), ev.include.end());
  for (EdgeId id : include) {
    if (graph_.edge(id).is_self_edge()) return T(0);
  }
  if (contains_cycle(graph_, include)) return T(0);

  std::vector<OrientedEdge> order;
  for (EdgeId id : include) order.push_back(graph_.canonical_orientation(id));
  for (EdgeId id : ev.exclude) {
    // a self-edge is never in a tree, so excluding it is free
    if (!graph_.edge(id).is_self_edge()) order.push_back(graph_.canonical_orientation(id));
  }
  Matrix<T> m = matrix(order).entries;
  for (std::size_t i = include.size(); i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) m(i, j) = (i == j ? T(1) : T(0)) - m(i, j);
  }
  return clamp_probability<T>(determinant(m));
}

template <Scalar T>
T transfer_impedance(const Graph& g, OrientedEdge e, OrientedEdge f) {
  return TransferKernel<T>(g).impedance(e, f);
}

template <Scalar T>
TransferMatrix<T> impedance_matrix(const Graph& g, const std::vector<OrientedEdge>& edges) {
  if (edges.empty()) throw Error(ErrorCode::invalid_argument, "edge list is empty");
  EdgeSet seen;
  for (const OrientedEdge& e : edges) {
    if (!seen.insert(e.edge).second) {
      throw Error(ErrorCode::invalid_argument, "edge " + std::to_string(e.edge) + " listed twice");
    }
  }
  return TransferKernel<T>(g).matrix(edges);
}

template <Scalar T>
T prob_edges_in(const Graph& g, const std::vector<EdgeId>& edges) {
  return TransferKernel<T>(g).prob_edges_in(edges);
}

template <Scalar T>
T prob_cylinder(const Graph& g, const CylinderEvent& ev) {
  return TransferKernel<T>(g).prob_cylinder(ev);
}

namespace {

template <Scalar T>
T edge_probability(const Graph& g, const Edge& e) {
  return scalar_from<T>(e.weight) * effective_resistance<T>(g, e.u, e.v);
}

template <Scalar T>
T weighted_recursion(const Graph& g, std::vector<EdgeId> include, std::vector<EdgeId> exclude) {
  if (!include.empty()) {
    const EdgeId id = include.back();
    include.pop_back();
    const Edge& e = g.edge(id);
    if (e.is_self_edge()) return T(0);
    const T p = edge_probability<T>(g, e);
    return p * weighted_recursion<T>(contract(g, id).first, std::move(include), std::move(exclude));
  }
  if (!exclude.empty()) {
    const EdgeId id = exclude.back();
    exclude.pop_back();
    const Edge& f = g.edge(id);
    if (f.is_self_edge()) return weighted_recursion<T>(g, {}, std::move(exclude));
    Graph rest = g.without_edge(id);
    if (!rest.is_connected()) return T(0);  // f is a bridge, so always in T
    const T q = T(1) - edge_probability<T>(g, f);
    return q * weighted_recursion<T>(rest, {}, std::move(exclude));
  }
  return T(1);
}

}  // namespace

template <Scalar T>
T prob_cylinder_weighted(const Graph& g, const CylinderEvent& ev) {
  if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");
  validate_event(g, ev);
  // popped from the back, so reverse to process in increasing id order
  std::vector<EdgeId> include(ev.include.rbegin(), ev.include.rend());
  std::vector<EdgeId> exclude(ev.exclude.rbegin(), ev.exclude.rend());
  return clamp_probability<T>(weighted_recursion<T>(g, std::move(include), std::move(exclude)));
}

template <Scalar T>
std::map<int, T> degree_pmf(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::out_of_range, "vertex id out of range");
  std::vector<EdgeId> star;
  for (const Incidence& inc : g.incident(v)) {
    if (inc.other != v) star.push_back(inc.edge);
  }
  if (star.size() > 20) {
    throw Error(ErrorCode::too_large,
                "vertex has " + std::to_string(star.size()) + " incident edges; limit is 20");
  }
  TransferKernel<T> kernel(g);
  std::map<int, T> pmf;
  for (int k = 0; k <= static_cast<int>(star.size()); ++k) pmf[k] = T(0);
  const std::uint32_t subsets = std::uint32_t{1} << star.size();
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    CylinderEvent ev;
    for (std::size_t i = 0; i < star.size(); ++i) {
      ((mask >> i) & 1u ? ev.include : ev.exclude).insert(star[i]);
    }
    pmf[std::popcount(mask)] += kernel.prob_cylinder(ev);
  }
  return pmf;
}

#define UST_TRANSFER_INSTANTIATE(T)                                                       \
  template class TransferKernel<T>;                                                       \
  template T transfer_impedance<T>(const Graph&, OrientedEdge, OrientedEdge);             \
  template TransferMatrix<T> impedance_matrix<T>(const Graph&, const std::vector<OrientedEdge>&); \
  template T prob_edges_in<T>(const Graph&, const std::vector<EdgeId>&);                  \
  template T prob_cylinder<T>(const Graph&, const CylinderEvent&);                        \
  template T prob_cylinder_weighted<T>(const Graph&, const CylinderEvent&);               \
  template std::map<int, T> degree_pmf<T>(const Graph&, VertexId);

UST_TRANSFER_INSTANTIATE(Rational)
UST_TRANSFER_INSTANTIATE(double)

}  // namespace ust
