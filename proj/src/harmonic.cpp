#include "ust/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ust/error.hpp"

namespace ust {

namespace {

void require_pair(const Graph& g, VertexId x, VertexId y) {
  if (x >= g.vertex_count() || y >= g.vertex_count()) {
    throw Error(ErrorCode::out_of_range, "vertex id out of range");
  }
  if (x == y) throw Error(ErrorCode::invalid_argument, "source and sink must differ");
  if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");
}

// Laplacian with the ground row and column removed; compressed index of v is
// v - (v > ground).
template <Scalar T>
Matrix<T> reduced_laplacian(const Graph& g, VertexId ground) {
  const std::size_t n = g.vertex_count();
  Matrix<T> l(n - 1, n - 1);
  auto idx = [ground](VertexId v) { return v - (v > ground ? 1 : 0); };
  for (const Edge& e : g.edges()) {
    if (e.is_self_edge()) continue;
    const T w = scalar_from<T>(e.weight);
    if (e.u != ground) l(idx(e.u), idx(e.u)) += w;
    if (e.v != ground) l(idx(e.v), idx(e.v)) += w;
    if (e.u != ground && e.v != ground) {
      l(idx(e.u), idx(e.v)) -= w;
      l(idx(e.v), idx(e.u)) -= w;
    }
  }
  return l;
}

}  // namespace

template <Scalar T>
Matrix<T> laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Matrix<T> l(n, n);
  for (const Edge& e : g.edges()) {
    if (e.is_self_edge()) continue;
    const T w = scalar_from<T>(e.weight);
    l(e.u, e.u) += w;
    l(e.v, e.v) += w;
    l(e.u, e.v) -= w;
    l(e.v, e.u) -= w;
  }
  return l;
}

template <Scalar T>
std::vector<T> excess(const Graph& g, const std::vector<T>& f) {
  if (f.size() != g.vertex_count()) {
    throw Error(ErrorCode::invalid_argument, "function size does not match vertex count");
  }
  std::vector<T> out(g.vertex_count(), T(0));
  for (const Edge& e : g.edges()) {
    if (e.is_self_edge()) continue;
    const T flow = scalar_from<T>(e.weight) * (f[e.u] - f[e.v]);
    out[e.u] += flow;
    out[e.v] -= flow;
  }
  return out;
}

template <Scalar T>
Potential<T> unit_current_potential(const Graph& g, VertexId x, VertexId y) {
  require_pair(g, x, y);
  const std::size_t n = g.vertex_count();
  Matrix<T> rhs(n - 1, 1);
  rhs(x - (x > y ? 1 : 0), 0) = T(1);
  Matrix<T> sol = solve(reduced_laplacian<T>(g, y), rhs);
  Potential<T> phi;
  phi.reference = y;
  phi.values.assign(n, T(0));
  for (VertexId v = 0; v < n; ++v) {
    if (v != y) phi.values[v] = sol(v - (v > y ? 1 : 0), 0);
  }
  return phi;
}

template <Scalar T>
GroundedGreen<T>::GroundedGreen(const Graph& g, VertexId ground) : n_(g.vertex_count()), ground_(ground) {
  if (ground >= n_) throw Error(ErrorCode::out_of_range, "ground vertex out of range");
  if (!g.is_connected()) throw Error(ErrorCode::disconnected, "graph is not connected");
  if (n_ > 1) inverse_ = solve(reduced_laplacian<T>(g, ground), Matrix<T>::identity(n_ - 1));
}

template <Scalar T>
T GroundedGreen<T>::operator()(VertexId z, VertexId source) const {
  if (z == ground_ || source == ground_) return T(0);
  return inverse_(z - (z > ground_ ? 1 : 0), source - (source > ground_ ? 1 : 0));
}

template <Scalar T>
Potential<T> hitting_voltage(const Graph& g, VertexId a, VertexId b) {
  // phi_ab is harmonic off {a, b} and vanishes at b, so rescaling it to 1 at
  // a gives the battery solution.
  Potential<T> phi = unit_current_potential<T>(g, a, b);
  const T scale = phi.values[a];
  for (T& v : phi.values) v /= scale;
  // maximum principle: a battery potential lies between its boundary values
  const T slack = ScalarTraits<T>::exact ? T(0) : T(1e-9);
  for (const T& v : phi.values) {
    if (v < -slack || v > T(1) + slack) throw Error(ErrorCode::numeric, "battery potential violates the maximum principle");
  }
  return phi;
}

template <Scalar T>
T effective_resistance(const Graph& g, VertexId a, VertexId b) {
  Potential<T> phi = unit_current_potential<T>(g, a, b);
  return phi.values[a] - phi.values[b];
}

template <Scalar T>
T expected_visits(const Graph& g, VertexId a, VertexId b, VertexId x) {
  if (x >= g.vertex_count()) throw Error(ErrorCode::out_of_range, "vertex id out of range");
  Potential<T> phi = unit_current_potential<T>(g, a, b);
  if (x == b) return T(0);
  return scalar_from<T>(g.degree(x)) * phi.values[x];
}

namespace {

constexpr double kImagTolerance = 1e-9;

// Raw eigen-expansion sum without the additive constant.
std::complex<double> torus_sum(int n, int i, int j) {
  const double two_pi_over_n = 2.0 * std::numbers::pi / n;
  std::complex<double> acc = 0.0;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (k == 0 && l == 0) continue;
      const double lambda = 4.0 - 2.0 * std::cos(two_pi_over_n * k) - 2.0 * std::cos(two_pi_over_n * l);
      // coefficient of f_kl in delta_(0,0) - delta_(1,0) is (1 - zeta^{-k}) / n^2
      const std::complex<double> coeff(1.0 - std::cos(two_pi_over_n * k), std::sin(two_pi_over_n * k));
      const double phase = two_pi_over_n * ((static_cast<long>(k) * i + static_cast<long>(l) * j) % n);
      acc += coeff / lambda * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  return acc / static_cast<double>(n) / static_cast<double>(n);
}

}  // namespace

double torus_potential(int n, int i, int j) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "torus needs n >= 3");
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error(ErrorCode::out_of_range, "torus vertex out of range");
  const std::complex<double> v = torus_sum(n, i, j) - torus_sum(n, 1, 0);
  if (std::abs(v.imag()) >= kImagTolerance) {
    throw Error(ErrorCode::numeric, "torus potential has imaginary residue " + std::to_string(v.imag()));
  }
  return v.real();
}

std::vector<std::vector<double>> torus_potential_table(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "torus needs n >= 3");
  const std::complex<double> base = torus_sum(n, 1, 0);
  std::vector<std::vector<double>> table(n, std::vector<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::complex<double> v = torus_sum(n, i, j) - base;
      if (std::abs(v.imag()) >= kImagTolerance) {
        throw Error(ErrorCode::numeric, "torus potential has imaginary residue");
      }
      table[j][i] = v.real();
    }
  }
  return table;
}

std::vector<std::complex<double>> circulant_eigenvalues(const CirculantSpec& spec) {
  const std::size_t k = spec.coefficients.size();
  if (k == 0) throw Error(ErrorCode::invalid_argument, "circulant needs at least one coefficient");
  std::vector<std::complex<double>> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * t) % k) / static_cast<double>(k);
      acc += spec.coefficients[t] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    out[j] = acc;
  }
  return out;
}

double circulant_determinant(const CirculantSpec& spec) {
  std::complex<double> det = 1.0;
  for (const auto& lambda : circulant_eigenvalues(spec)) det *= lambda;
  if (std::abs(det.imag()) >= kImagTolerance) {
    throw Error(ErrorCode::numeric, "circulant determinant has imaginary residue");
  }
  return det.real();
}

template Matrix<Rational> laplacian<Rational>(const Graph&);
template Matrix<double> laplacian<double>(const Graph&);
template std::vector<Rational> excess<Rational>(const Graph&, const std::vector<Rational>&);
template std::vector<double> excess<double>(const Graph&, const std::vector<double>&);
template Potential<Rational> unit_current_potential<Rational>(const Graph&, VertexId, VertexId);
template Potential<double> unit_current_potential<double>(const Graph&, VertexId, VertexId);
template class GroundedGreen<Rational>;
template class GroundedGreen<double>;
template Potential<Rational> hitting_voltage<Rational>(const Graph&, VertexId, VertexId);
template Potential<double> hitting_voltage<double>(const Graph&, VertexId, VertexId);
template Rational effective_resistance<Rational>(const Graph&, VertexId, VertexId);
template double effective_resistance<double>(const Graph&, VertexId, VertexId);
template Rational expected_visits<Rational>(const Graph&, VertexId, VertexId, VertexId);
template double expected_visits<double>(const Graph&, VertexId, VertexId, VertexId);

}  // namespace ust
