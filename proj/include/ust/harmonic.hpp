#pragma once

#include <complex>
#include <vector>

#include "ust/graph.hpp"
#include "ust/linalg.hpp"

namespace ust {

/// Vertex-indexed potential (volts), meaningful up to an additive constant.
/// The stored representative has values[reference] == 0 unless it is a
/// battery solution with fixed boundary values.
template <Scalar T>
struct Potential {
  std::vector<T> values;
  VertexId reference = 0;

  const T& operator[](VertexId v) const { return values[v]; }
};

/// Matrix of the excess operator: (L f)(v) = sum over edges vy of
/// [f(v) - f(y)] w(vy). Self-edges contribute nothing.
template <Scalar T>
Matrix<T> laplacian(const Graph& g);

/// Excess vector L f.
template <Scalar T>
std::vector<T> excess(const Graph& g, const std::vector<T>& f);

/// Solves L phi = delta_x - delta_y with phi(y) = 0 by deleting y's row and
/// column from L. Throws Error(disconnected) / Error(invalid_argument).
template <Scalar T>
Potential<T> unit_current_potential(const Graph& g, VertexId x, VertexId y);

/// Grounded Green's function: column x holds the unit-current potential from x
/// to `ground`, so G(z, x) - G(w, x) is the voltage drop z -> w. One
/// factorisation serves every source.
template <Scalar T>
class GroundedGreen {
 public:
  GroundedGreen(const Graph& g, VertexId ground);

  VertexId ground() const { return ground_; }
  std::size_t vertex_count() const { return n_; }

  /// Potential at z of the unit flow injected at `source` and drained at the
  /// ground.
  T operator()(VertexId z, VertexId source) const;

  /// phi_{xy}(z) for the unit flow from x to y, up to the grounding constant.
  T flow_potential(VertexId x, VertexId y, VertexId z) const {
    return (*this)(z, x) - (*this)(z, y);
  }

 private:
  std::size_t n_ = 0;
  VertexId ground_ = 0;
  Matrix<T> inverse_;  // (n-1) x (n-1), indexed by compressed ids
};

/// h(a) = 1, h(b) = 0, harmonic elsewhere; h(x) = P(walk from x hits a
/// before b).
template <Scalar T>
Potential<T> hitting_voltage(const Graph& g, VertexId a, VertexId b);

/// phi_ab(a) - phi_ab(b) for the unit-current potential.
template <Scalar T>
T effective_resistance(const Graph& g, VertexId a, VertexId b);

/// u_ab(x) = d(x) phi_ab(x): expected number of visits to x by a walk from a
/// stopped on first hitting b. Zero for x == b.
template <Scalar T>
T expected_visits(const Graph& g, VertexId a, VertexId b, VertexId x);

/// Unit-current potential on the n x n torus from (0,0) to (1,0), evaluated
/// at (i, j) by the eigenfunction expansion and grounded at (1,0).
double torus_potential(int n, int i, int j);

/// Whole table, indexed [j][i].
std::vector<std::vector<double>> torus_potential_table(int n);

/// Circulant matrix M(i, j) = a[(i - j) mod k].
struct CirculantSpec {
  std::vector<double> coefficients;
};

/// lambda_j = sum_t a_t zeta^{jt} with zeta = exp(2 pi i / k).
std::vector<std::complex<double>> circulant_eigenvalues(const CirculantSpec& spec);

/// Product of the eigenvalues; throws Error(numeric) if the imaginary part
/// exceeds 1e-9 in magnitude.
double circulant_determinant(const CirculantSpec& spec);

extern template Matrix<Rational> laplacian<Rational>(const Graph&);
extern template Matrix<double> laplacian<double>(const Graph&);
extern template std::vector<Rational> excess<Rational>(const Graph&, const std::vector<Rational>&);
extern template std::vector<double> excess<double>(const Graph&, const std::vector<double>&);
extern template Potential<Rational> unit_current_potential<Rational>(const Graph&, VertexId, VertexId);
extern template Potential<double> unit_current_potential<double>(const Graph&, VertexId, VertexId);
extern template class GroundedGreen<Rational>;
extern template class GroundedGreen<double>;
extern template Potential<Rational> hitting_voltage<Rational>(const Graph&, VertexId, VertexId);
extern template Potential<double> hitting_voltage<double>(const Graph&, VertexId, VertexId);
extern template Rational effective_resistance<Rational>(const Graph&, VertexId, VertexId);
extern template double effective_resistance<double>(const Graph&, VertexId, VertexId);
extern template Rational expected_visits<Rational>(const Graph&, VertexId, VertexId, VertexId);
extern template double expected_visits<double>(const Graph&, VertexId, VertexId, VertexId);

}  // namespace ust
