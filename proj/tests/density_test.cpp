#include "extremal/density.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace extremal;

namespace {

const double kHalfSqrt = 1.0 / std::sqrt(2.0);

const WeightingSpectrum& g6() {
  static const WeightingSpectrum s(g6_graph());
  return s;
}

// Straight sum over the full 3^v weighting scan, with plain pow.
double naive_t(const Graph& g, double beta, double q) {
  ClassFractions f = class_fractions(beta, q);
  double total = 0.0;
  for (const auto& [k, mult] : brute::weightings(g)) {
    auto [r, y, b] = k;
    total += mult * std::pow(f.r, r) * std::pow(f.y, y) * std::pow(f.b, b);
  }
  return total;
}

}  // namespace

TEST(ClassFractions, Endpoints) {
  for (double beta : {0.0, 0.01, 0.3, 0.99, 1.0}) {
    auto s = class_fractions(beta, 0.0);
    EXPECT_EQ(s.y, 0.0);
    EXPECT_NEAR(s.r, 1 - std::sqrt(1 - beta), 1e-15);
    EXPECT_NEAR(s.b, std::sqrt(1 - beta), 1e-15);
    auto k = class_fractions(beta, 1.0);
    EXPECT_EQ(k.r, 0.0);
    EXPECT_NEAR(k.y, std::sqrt(beta), 1e-15);
    EXPECT_NEAR(k.b, 1 - std::sqrt(beta), 1e-15);
  }
  auto e = class_fractions(0.0, 0.4);
  EXPECT_EQ(e.y, 0.0);
  EXPECT_EQ(e.r, 0.0);
  EXPECT_EQ(e.b, 1.0);
  EXPECT_THROW(class_fractions(1.1, 0.5), InvalidArgument);
  EXPECT_THROW(class_fractions(0.5, -0.1), InvalidArgument);
}

TEST(ClassFractions, IdentitiesAtRandomPoints) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200000; ++i) {
    double beta = unit(rng);
    double q = unit(rng);
    auto f = class_fractions(beta, q);
    ASSERT_GE(f.r, 0.0);
    ASSERT_GE(f.b, 0.0);
    ASSERT_NEAR(f.y + f.r + f.b, 1.0, 1e-12);
    ASSERT_NEAR(f.y * f.y + f.r * f.r + 2 * f.r * (f.y + f.b), beta, 1e-12);
  }
}

TEST(Density, QuasiCliqueEndpoint) {
  for (double beta : {1e-6, 0.01, 0.25, 0.8}) {
    EXPECT_NEAR(t_density(g6(), beta, 1.0), std::pow(beta, 3), 1e-14 * std::pow(beta, 3));
  }
  EXPECT_DOUBLE_EQ(k_density(g6(), 0.25), 0.015625);
}

TEST(Density, HandExpandedPolynomials) {
  double beta = 0.01;
  double r = 1 - std::sqrt(0.99);
  double b = std::sqrt(0.99);
  double expected_s = brute::g6_quasi_star_polynomial(r, b);
  EXPECT_NEAR(t_density(g6(), beta, 0.0), expected_s, 1e-12 * expected_s);
  EXPECT_NEAR(s_density(g6(), beta), expected_s, 1e-12 * expected_s);

  for (double bb : {0.005, 0.01, 0.016}) {
    auto [y, rr, b2] = brute::half_sqrt_fractions(bb);
    double expected = brute::g6_t_polynomial(y, rr, b2);
    EXPECT_NEAR(t_density(g6(), bb, kHalfSqrt), expected, 1e-12 * expected) << bb;
  }
}

TEST(Density, StarEndpoint) {
  WeightingSpectrum p2(path_graph(2));
  EXPECT_NEAR(s_density(p2, 0.5), std::pow(2.0, -1.5), 1e-14);
  EXPECT_NEAR(s_density(p2, 0.5), k_density(p2, 0.5), 1e-14);
  EXPECT_EQ(s_density(g6(), 0.0), 0.0);
}

TEST(Density, AgreesWithNaiveSum) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const Graph& g : enumerate_connected_graphs(5)) {
    WeightingSpectrum s(g);
    for (int k = 0; k < 10; ++k) {
      double beta = 0.05 + 0.9 * unit(rng);
      double q = unit(rng);
      double expected = naive_t(g, beta, q);
      EXPECT_NEAR(t_density(s, beta, q), expected, 1e-12 * expected) << g.edge_list();
      EXPECT_NEAR(std::exp(log_t_density(s, beta, q)), expected, 1e-12 * expected);
    }
  }
}

TEST(Density, NonDecreasingInBeta) {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    WeightingSpectrum s(g);
    for (double q : {0.0, 0.25, kHalfSqrt, 1.0}) {
      double prev = 0.0;
      for (double beta : linear_grid(0.0, 1.0, 101)) {
        double t = t_density(s, beta, q);
        EXPECT_GE(t, prev * (1 - 1e-12)) << g.edge_list() << " q=" << q << " beta=" << beta;
        prev = t;
      }
    }
  }
}

TEST(Profile, InteriorWinnerForCounterexample) {
  ProfilePoint p = f_T_profile(g6(), 0.01);
  EXPECT_GT(p.f_T, std::max(p.t_S, p.t_K));
  EXPECT_GT(p.q_star, 0.0);
  EXPECT_LT(p.q_star, 1.0);
  EXPECT_EQ(attribute_winner(p), Winner::T);
  EXPECT_FALSE(p.tie);
}

TEST(Profile, TriangleMaximisedAtClique) {
  WeightingSpectrum k3(complete_graph(3));
  for (double beta : {0.001, 0.1, 0.5, 0.9}) {
    ProfilePoint p = f_T_profile(k3, beta);
    EXPECT_EQ(p.q_star, 1.0) << beta;
    EXPECT_EQ(attribute_winner(p), Winner::K);
  }
}

TEST(Profile, CompleteHostIsATie) {
  ProfilePoint p = f_T_profile(g6(), 1.0);
  EXPECT_NEAR(p.f_T, 1.0, 1e-12);
  EXPECT_TRUE(p.tie);
  EXPECT_EQ(p.q_star, 0.0);
  EXPECT_EQ(attribute_winner(p), Winner::K);
}

TEST(Profile, SupremumDominatesEndpoints) {
  for (const Graph& g : enumerate_connected_graphs(4)) {
    WeightingSpectrum s(g);
    DensityCurve c = density_curve(s, linear_grid(0.01, 0.99, 20), g.edge_list(), 64, 1e-9);
    for (const auto& sample : c.samples) {
      EXPECT_GE(sample.point.f_T, std::max(sample.point.t_S, sample.point.t_K));
    }
  }
  EXPECT_THROW(density_curve(g6(), {0.2, 0.1}, "x", 64, 1e-9), InvalidArgument);
  EXPECT_THROW(f_T_profile(g6(), 0.1, 32), InvalidArgument);
}

TEST(Crossover, KnownFlips) {
  EXPECT_NEAR(crossover_beta(g6(), 1.0, kHalfSqrt, 0.01, 0.03), 0.01613474, 1e-6);
  WeightingSpectrum p2(path_graph(2));
  EXPECT_NEAR(crossover_beta(p2, 0.0, 1.0, 0.3, 0.7), 0.5, 1e-9);
  WeightingSpectrum p4(path_graph(4));
  EXPECT_NEAR(crossover_beta(p4, 0.0, 1.0, 0.05, 0.12), 0.0865, 5e-4);
  EXPECT_THROW(crossover_beta(p2, 0.0, 1.0, 0.6, 0.7), InvalidArgument);
}

TEST(Exponent, VanishingBetaSlopes) {
  EXPECT_NEAR(asymptotic_exponent(g6(), 1.0, 1e-6, 1e-4), 3.0, 1e-9);
  EXPECT_NEAR(asymptotic_exponent(g6(), kHalfSqrt, 1e-6, 1e-4), 2.5, 0.05);
  EXPECT_NEAR(asymptotic_exponent(g6(), 0.0, 1e-6, 1e-4), 3.0, 0.05);
  EXPECT_THROW(asymptotic_exponent(g6(), 0.5, 1e-6, 1e-4, 10), InvalidArgument);
}

TEST(Exponent, LimitConstants) {
  // Relative error within 10 sqrt(beta) at q = 1/sqrt2; for other q the
  // constant in front of sqrt(beta) depends on q, so there only the order
  // of convergence is checked: 100x smaller beta gives at least 8x smaller
  // error (some graphs converge at order beta).
  for (const Graph& g : enumerate_connected_graphs(5)) {
    WeightingSpectrum s(g);
    double v = g.vertex_count();
    double star = to_double(s.alpha_star());
    double c2 = to_double(c2_constant(s));
    auto rel_error = [&](double beta, double q) {
      return std::abs(t_density(s, beta, q) / std::pow(beta, v - star) / c1_constant(s, q) - 1);
    };
    for (double beta : {1e-6, 1e-8}) {
      EXPECT_LE(rel_error(beta, kHalfSqrt), 10 * std::sqrt(beta)) << g.edge_list();
      double ratio = s_density(s, beta) / std::pow(beta, v - s.alpha());
      EXPECT_LE(std::abs(ratio / c2 - 1), 10 * beta) << g.edge_list();
    }
    for (double q : {0.3, 0.9}) {
      double coarse = rel_error(1e-6, q);
      double fine = rel_error(1e-8, q);
      if (coarse > 1e-9) {
        EXPECT_LE(fine / coarse, 0.125) << g.edge_list() << " q=" << q;
      } else {
        EXPECT_LE(fine, 1e-9);
      }
    }
  }
}

TEST(Exponent, StarVersusCliqueForSmallBeta) {
  for (const Graph& g : enumerate_connected_graphs(5)) {
    WeightingSpectrum s(g);
    bool clique_side = 2 * s.alpha() <= g.vertex_count();
    for (double beta : {1e-4, 1e-5, 1e-7}) {
      double k = k_density(s, beta);
      double st = s_density(s, beta);
      if (clique_side) {
        EXPECT_GE(k, st * (1 - 1e-12)) << g.edge_list();
      } else {
        EXPECT_LT(k, st) << g.edge_list();
      }
    }
  }
}

TEST(Grids, Shapes) {
  auto lin = linear_grid(0.0, 1.0, 5);
  EXPECT_EQ(lin, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  auto geo = geometric_grid(1e-4, 1e-2, 3);
  EXPECT_NEAR(geo[1], 1e-3, 1e-15);
  EXPECT_EQ(geo.back(), 1e-2);
}
