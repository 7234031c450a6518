#pragma once

#include <cstdint>
#include <map>

#include "ust/graph.hpp"
#include "ust/rooted_tree.hpp"
#include "ust/sampler.hpp"
#include "ust/scalar.hpp"

namespace ust {

// ---------------------------------------------------------------------------
// Degree laws

/// P(X = k) for X = 1 + Poisson(1): e^{-1}/(k-1)! for k >= 1, 0 for k = 0.
double poisson_plus_one_pmf(int k);

/// Exact law of the tree degree of a vertex of K_n, 3 <= n <= 12, from one
/// cylinder determinant per degree value (all k-subsets of the star are
/// equivalent under symmetry).
std::map<int, Rational> kn_degree_pmf(int n);

/// sum_k p(k) (k)_r with (k)_r = k (k-1) ... (k-r+1).
template <class T>
T falling_factorial_moment(const std::map<int, T>& dist, int r) {
  T total(0);
  for (const auto& [k, p] : dist) {
    T falling(1);
    for (int i = 0; i < r; ++i) falling *= T(k - i);
    total += p * falling;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Branching processes

/// Poisson(1) by inversion of a cumulative table that stops at k = 40.
class PoissonOneSampler {
 public:
  PoissonOneSampler();
  int operator()(Rng& rng) const;

 private:
  std::vector<double> cumulative_;
};

struct GaltonWatsonSample {
  RootedTree tree;
  /// Some vertex at depth max_depth had offspring that were cut off.
  bool truncated = false;
};

/// Critical Poisson(1) Galton-Watson tree grown depth-first, cut at
/// max_depth.
GaltonWatsonSample galton_watson_sample(RngSeed seed, int max_depth);

/// Backbone v_0 ... v_r with an independent Poisson(1) Galton-Watson tree
/// hung from every v_i, everything cut at height r. The backbone child is
/// always the first child.
RootedTree incipient_cluster_sample(int r, RngSeed seed);

// ---------------------------------------------------------------------------
// Tree moments

/// Number of injective, root-preserving, neighbour-preserving maps from t
/// into w. In a rooted tree such maps send children to children.
Integer tree_map_count(const RootedTree& w, const RootedTree& t);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Mean of N(U; t) over Galton-Watson samples U cut at height(t) + 1.
/// Sample i uses derive_seed(seed, i).
MonteCarloEstimate gw_tree_moment(const RootedTree& t, std::uint64_t samples, RngSeed seed);

/// Mean of N(P; t) over incipient-cluster samples P cut at height r.
MonteCarloEstimate incipient_tree_moment(const RootedTree& t, int r, std::uint64_t samples, RngSeed seed);

/// E N(T; t) for a uniform spanning tree T of unweighted g rooted at v:
/// the sum over every image of t at v of P(image edges in T).
inline constexpr std::uint64_t kMaxTreeImages = 200000;
Rational ust_tree_moment(const Graph& g, VertexId v, const RootedTree& t);

// ---------------------------------------------------------------------------
// Entropy

/// log(#spanning trees of the n x n torus) / n^2, from the nonzero Laplacian
/// eigenvalues 4 - 2cos(2 pi k/n) - 2cos(2 pi l/n) (their product is n^2
/// times the tree count).
double spanning_tree_entropy_finite(int n);

/// Midpoint rule for the integral of ln(4 - 2cos(2 pi x) - 2cos(2 pi y)) over
/// the unit square, with pairwise summation.
double spanning_tree_entropy_integral(int grid);

}  // namespace ust
