#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "ust/error.hpp"
#include "ust/harmonic.hpp"
#include "ust/oracle.hpp"

using namespace ust;

TEST(Laplacian, SmallCases) {
  const Matrix<Rational> tri = laplacian<Rational>(test::triangle());
  for (std::size_t i = 0; i < 3; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(tri(i, j), i == j ? Rational(2) : Rational(-1));
      row += tri(i, j);
    }
    EXPECT_EQ(row, 0);
  }
  const std::vector<EdgeSpec> loop{{0, 0, Rational(5)}};
  EXPECT_EQ(laplacian<Rational>(Graph::build(1, loop))(0, 0), 0);

  const Matrix<Rational> t3 = laplacian<Rational>(make_family(Family::torus, 3));
  EXPECT_EQ(t3(test::t3::A, test::t3::A), 4);
  EXPECT_EQ(t3(test::t3::A, test::t3::B), -1);
  EXPECT_EQ(t3(test::t3::A, 4), 0);
}

TEST(Harmonic, CompleteGraphPotential) {
  for (int n = 3; n <= 10; ++n) {
    const Potential<Rational> phi = unit_current_potential<Rational>(make_family(Family::complete, n), 0, 1);
    EXPECT_EQ(phi[0], ratio(2, n));
    EXPECT_EQ(phi[1], 0);
    for (int v = 2; v < n; ++v) EXPECT_EQ(phi[v], ratio(1, n));
  }
}

TEST(Harmonic, SeriesPath) {
  const Graph path = make_family(Family::path, 3);
  const Potential<Rational> phi = unit_current_potential<Rational>(path, 0, 2);
  EXPECT_EQ(phi[0], 2);
  EXPECT_EQ(phi[1], 1);
  EXPECT_EQ(phi[2], 0);
  EXPECT_EQ(hitting_voltage<Rational>(path, 0, 2)[1], ratio(1, 2));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(effective_resistance<Rational>(make_family(Family::path, k + 1), 0, k), k);
  }
}

TEST(Harmonic, TorusTables) {
  const Potential<Rational> h3 = hitting_voltage<Rational>(make_family(Family::torus, 3), 0, 1);
  const Rational t3[3][3] = {{1, 0, ratio(1, 2)},
                             {ratio(5, 8), ratio(3, 8), ratio(1, 2)},
                             {ratio(5, 8), ratio(3, 8), ratio(1, 2)}};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) EXPECT_EQ(h3[i + 3 * j], t3[j][i]) << i << "," << j;
  }
  const Potential<Rational> h4 = hitting_voltage<Rational>(make_family(Family::torus, 4), 0, 1);
  const int t4[4][4] = {{90, 0, 34, 56}, {56, 34, 40, 50}, {50, 40, 42, 48}, {56, 34, 40, 50}};
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) EXPECT_EQ(h4[i + 4 * j], ratio(t4[j][i], 90)) << i << "," << j;
  }
  const Potential<Rational> phi3 = unit_current_potential<Rational>(make_family(Family::torus, 3), 0, 1);
  EXPECT_EQ(phi3[0], ratio(8, 18));
  EXPECT_EQ(effective_resistance<Rational>(make_family(Family::torus, 4), 0, 1), ratio(90, 192));
}

TEST(Harmonic, FourierAgreesWithSolver) {
  for (int n = 3; n <= 5; ++n) {
    const Potential<double> phi = unit_current_potential<double>(make_family(Family::torus, n), 0, 1);
    const auto table = torus_potential_table(n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(table[j][i], phi[static_cast<std::size_t>(i + n * j)], 1e-9);
        EXPECT_NEAR(torus_potential(n, i, j), table[j][i], 1e-12);
      }
    }
  }
  EXPECT_NEAR(torus_potential(3, 0, 0) - torus_potential(3, 1, 0), 8.0 / 18.0, 1e-12);
  EXPECT_THROW(torus_potential(2, 0, 0), Error);
}

TEST(Harmonic, ResistanceMatchesBitreeRatio) {
  const Graph g = test::g1();
  for (VertexId a = 0; a < 5; ++a) {
    for (VertexId b = 0; b < 5; ++b) {
      if (a == b) continue;
      EXPECT_EQ(effective_resistance<Rational>(g, a, b), bitree_weight_sum(g, a, b) / matrix_tree_count(g));
    }
  }
  EXPECT_EQ(effective_resistance<Rational>(g, 0, 1), ratio(8, 11));
  EXPECT_EQ(effective_resistance<Rational>(test::triangle(), 0, 1), ratio(2, 3));
}

TEST(Harmonic, ExpectedVisits) {
  const Graph path = make_family(Family::path, 3);
  EXPECT_EQ(expected_visits<Rational>(path, 0, 2, 1), 2);
  EXPECT_EQ(expected_visits<Rational>(path, 0, 2, 2), 0);
  EXPECT_EQ(expected_visits<Rational>(test::triangle(), 0, 1, 2), ratio(2, 3));
}

TEST(Harmonic, Errors) {
  const std::vector<EdgeSpec> split{{0, 1}, {2, 3}};
  const Graph g = Graph::build(4, split);
  EXPECT_THROW(unit_current_potential<Rational>(g, 0, 1), Error);
  EXPECT_THROW(unit_current_potential<Rational>(test::g1(), 2, 2), Error);
  EXPECT_THROW(effective_resistance<double>(test::g1(), 0, 9), Error);
}

TEST(HarmonicProperties, MaxPrincipleGroundingAndExcess) {
  std::mt19937_64 pick(3);
  for (const Graph& g : test::random_corpus(100, 21, 8, true)) {
    const std::size_t n = g.vertex_count();
    const VertexId a = pick() % n;
    VertexId b = pick() % n;
    if (a == b) b = (a + 1) % n;
    const Potential<Rational> h = hitting_voltage<Rational>(g, a, b);
    for (const Rational& v : h.values) {
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 1);
    }

    // same flow, different ground: potentials differ by a constant
    const Potential<Rational> phi = unit_current_potential<Rational>(g, a, b);
    const GroundedGreen<Rational> other(g, a);
    const Rational shift = phi[0] - other.flow_potential(a, b, 0);
    for (VertexId z = 0; z < n; ++z) EXPECT_EQ(phi[z] - other.flow_potential(a, b, z), shift);

    const std::vector<Rational> ex = excess<Rational>(g, phi.values);
    Rational total = 0;
    for (VertexId z = 0; z < n; ++z) {
      total += ex[z];
      EXPECT_EQ(ex[z], z == a ? Rational(1) : z == b ? Rational(-1) : Rational(0));
    }
    EXPECT_EQ(total, 0);
  }
}

TEST(HarmonicProperties, RayleighMonotonicity) {
  std::mt19937_64 rng(99);
  for (const Graph& g : test::random_corpus(100, 22, 8, true)) {
    const std::size_t n = g.vertex_count();
    const VertexId a = rng() % n;
    const VertexId b = (a + 1 + rng() % (n - 1)) % n;
    std::vector<EdgeSpec> edges = g.edge_specs();
    edges.push_back({rng() % n, rng() % n, Rational(1 + static_cast<long>(rng() % 3))});
    const Graph bigger = Graph::build(n, edges);
    EXPECT_LE(effective_resistance<Rational>(bigger, a, b), effective_resistance<Rational>(g, a, b));
  }
}

TEST(Circulant, Eigenvalues) {
  for (int n = 5; n <= 9; ++n) {
    for (int drop : {2, 3}) {
      const int k = n - drop;
      CirculantSpec spec;
      spec.coefficients.assign(static_cast<std::size_t>(k), -1.0 / n);
      spec.coefficients[0] = static_cast<double>(n - 2) / n;
      const auto lambda = circulant_eigenvalues(spec);
      // a0 + (k-1)(-1/n) = (n-2-k+1)/n: 1/n when k = n-2, 2/n when k = n-3
      EXPECT_NEAR(lambda[0].real(), static_cast<double>(drop - 1) / n, 1e-12);
      for (int j = 1; j < k; ++j) {
        EXPECT_NEAR(lambda[static_cast<std::size_t>(j)].real(), static_cast<double>(n - 1) / n, 1e-12);
        EXPECT_NEAR(lambda[static_cast<std::size_t>(j)].imag(), 0.0, 1e-12);
      }
    }
  }
  CirculantSpec id{{1.0, 0.0, 0.0, 0.0}};
  for (const auto& l : circulant_eigenvalues(id)) EXPECT_NEAR(std::abs(l - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(circulant_determinant(id), 1.0, 1e-12);
}
