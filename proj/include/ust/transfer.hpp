#pragma once

#include <map>
#include <vector>

#include "ust/graph.hpp"
#include "ust/harmonic.hpp"
#include "ust/linalg.hpp"

namespace ust {

/// Square matrix of pairwise transfer impedances over an ordered edge list.
template <Scalar T>
struct TransferMatrix {
  std::vector<OrientedEdge> edges;
  Matrix<T> entries;
};

/// Edges required in the tree and edges required out of it.
struct CylinderEvent {
  EdgeSet include;
  EdgeSet exclude;
};

/// Transfer impedances of one graph, backed by a single grounded Green's
/// function so that any number of H(e, f) lookups cost O(1) each.
///
/// Only defined for graphs whose non-self edges all have weight 1; weighted
/// graphs go through prob_cylinder_weighted.
template <Scalar T>
class TransferKernel {
 public:
  explicit TransferKernel(const Graph& g);

  const Graph& graph() const { return graph_; }

  /// H(e, f) = phi_xy(z) - phi_xy(w) for e = x -> y and f = z -> w.
  T impedance(OrientedEdge e, OrientedEdge f) const;

  TransferMatrix<T> matrix(const std::vector<OrientedEdge>& edges) const;

  /// P(all of `edges` in T); zero when they contain a cycle.
  T prob_edges_in(const std::vector<EdgeId>& edges) const;

  /// Determinant of the inclusion-exclusion matrix: include rows keep H,
  /// exclude rows become delta_ij - H.
  T prob_cylinder(const CylinderEvent& ev) const;

 private:
  Graph graph_;
  GroundedGreen<T> green_;
};

template <Scalar T>
T transfer_impedance(const Graph& g, OrientedEdge e, OrientedEdge f);

template <Scalar T>
TransferMatrix<T> impedance_matrix(const Graph& g, const std::vector<OrientedEdge>& edges);

/// Uses the canonical orientation (lower id -> higher id) for every edge.
template <Scalar T>
T prob_edges_in(const Graph& g, const std::vector<EdgeId>& edges);

template <Scalar T>
T prob_cylinder(const Graph& g, const CylinderEvent& ev);

/// Weighted cylinder probability by deletion-contraction: each included edge
/// contributes w(e) R_eff(e) and is contracted, each excluded edge
/// contributes 1 - w(f) R_eff(f) and is deleted. Include edges go first.
template <Scalar T>
T prob_cylinder_weighted(const Graph& g, const CylinderEvent& ev);

/// Exact law of the tree degree of v, assembled from cylinder probabilities
/// over subsets of the incident edges (at most 20 of them).
template <Scalar T>
std::map<int, T> degree_pmf(const Graph& g, VertexId v);

#define UST_TRANSFER_EXTERN(T)                                                              \
  extern template class TransferKernel<T>;                                                  \
  extern template T transfer_impedance<T>(const Graph&, OrientedEdge, OrientedEdge);        \
  extern template TransferMatrix<T> impedance_matrix<T>(const Graph&,                      \
                                                        const std::vector<OrientedEdge>&); \
  extern template T prob_edges_in<T>(const Graph&, const std::vector<EdgeId>&);             \
  extern template T prob_cylinder<T>(const Graph&, const CylinderEvent&);                   \
  extern template T prob_cylinder_weighted<T>(const Graph&, const CylinderEvent&);          \
  extern template std::map<int, T> degree_pmf<T>(const Graph&, VertexId);

UST_TRANSFER_EXTERN(Rational)
UST_TRANSFER_EXTERN(double)
#undef UST_TRANSFER_EXTERN

}  // namespace ust
