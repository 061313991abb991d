#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ctoep/eigvec.hpp"
#include "ctoep/solver.hpp"
#include "test_support.hpp"

using namespace ctoep;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(FirstApproximation, HalfAtMidpoint) {
  const auto p = first_approximation(make_gamma(0.5), 63, 32);
  EXPECT_NEAR(p.real(), kPi / 2, 1e-15);
  EXPECT_NEAR(p.imag(), std::log(3.0) / 2 / 64, 1e-16);
}

TEST(Solver, ConvergesForHalfAt32) {
  const auto g = make_gamma(0.5);
  const auto spec = solve_spectrum(g, 32);
  ASSERT_EQ(spec.entries.size(), 32u);
  for (const auto& e : spec.entries) {
    EXPECT_LT(std::abs(e.lambda.real()), 1.0);
    EXPECT_LT(std::abs(e.lambda.imag()), 2.0);
    EXPECT_LE(eigenvector_components(g, 32, e).residual, 1e-12) << e.j;
  }
}

TEST(Solver, MatchesDenseEigenvalues) {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 40; ++k) {
    const auto g = make_gamma(std::polar(0.05 + 0.85 * u(rng), 2 * kPi * u(rng)));
    const std::size_t n = 2 + static_cast<std::size_t>(u(rng) * 38);
    const auto spec = solve_spectrum(g, n);
    const double d = reference::nearest_match_distance(spec.eigenvalues(),
                                                     reference::dense_eigenvalues(g.value(), n));
    EXPECT_LT(d, 1e-10) << g.value() << " n=" << n;
  }
}

TEST(Solver, FixedPointInsideLocalizationBallAboveThreshold) {
  const auto g = make_gamma(0.5);
  for (std::size_t n : {64u, 100u}) {
    const auto spec = solve_spectrum(g, n);
    for (const auto& e : spec.entries) {
      const auto ball = localization_ball(g, n, e.j);
      EXPECT_LE(std::abs(e.s - ball.center), ball.radius);
      EXPECT_LT(std::abs(e.s.imag()), g.delta() / 2);
    }
  }
}

TEST(Solver, DistinctAndOrdered) {
  for (const auto& g : {make_gamma(0.5), make_gamma(0.0, 1.0 / 3), make_gamma(0.4, -5.0 / 6)}) {
    for (std::size_t n : {16u, 64u}) {
      const auto spec = solve_spectrum(g, n);
      EXPECT_TRUE(strictly_ordered(spec)) << g.value() << " n=" << n;
      const auto l = spec.eigenvalues();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) EXPECT_GT(std::abs(l[a] - l[b]), 1e-8);
    }
  }
}

TEST(Solver, RealGammaConjugateSymmetry) {
  const auto spec = solve_spectrum(make_gamma(0.5), 24);
  const auto l = spec.eigenvalues();
  for (const auto& x : l) {
    double best = INFINITY;
    for (const auto& y : l) best = std::min(best, std::abs(y - std::conj(x)));
    EXPECT_LE(best, 1e-10);
  }
}

TEST(Solver, MainEquationAndCharpolyResiduals) {
  const auto g = make_gamma(0.0, 0.5);
  const std::size_t n = 50;
  IterationConfig<double> cfg;
  const auto spec = solve_spectrum(g, n, cfg);
  for (const auto& e : spec.entries) {
    EXPECT_LE(e.fp_residual, 10 * cfg.tol);
    EXPECT_LE(std::abs(charpoly_chebyshev(g.value(), n, e.lambda)), 1e-9 * n);
  }
}

TEST(Solver, ContractionCertificate) {
  const auto g = make_gamma(0.5);
  const auto c64 = contraction_certificate(g, 64, 10);
  EXPECT_TRUE(c64.guaranteed);
  EXPECT_TRUE(c64.contracts());
  // sup |theta'| <= M1 over the half strip, so |f'| <= M1/(n+1).
  EXPECT_LE(c64.factor, g.m1() / 65);
  const auto c128 = contraction_certificate(g, 128, 64);
  EXPECT_LE(c128.factor, g.m1() / 129);
  EXPECT_FALSE(contraction_certificate(g, 8, 1).guaranteed);
}

TEST(Solver, UniqueFixedPointFromBallRestarts) {
  const auto g = make_gamma(0.3, 0.3);
  const std::size_t n = 128;
  for (std::size_t j : {1u, 40u, 128u}) {
    const auto ref = iterate_fixed_point(g, n, j);
    const auto ball = localization_ball(g, n, j);
    for (int a = 0; a < 8; ++a) {
      const C start = ball.center + std::polar(ball.radius, 2 * kPi * a / 8);
      const auto alt = iterate_from(g, n, j, start);
      EXPECT_LT(std::abs(alt.s - ref.s), 1e-13);
    }
  }
}

TEST(Solver, SmallOrderNearUnitModulusLeavesStripButIsEigenvalue) {
  const auto g = make_gamma(0.9);
  const auto spec = solve_spectrum(g, 2);
  bool outside = false;
  for (const auto& e : spec.entries) outside = outside || !e.in_strip;
  EXPECT_TRUE(outside);
  EXPECT_LT(reference::nearest_match_distance(spec.eigenvalues(), reference::dense_eigenvalues(g.value(), 2)),
            1e-12);
}

TEST(Solver, Deterministic) {
  const auto g = make_gamma(0.4, -5.0 / 6);
  const auto a = solve_spectrum(g, 37);
  const auto b = solve_spectrum(g, 37);
  for (std::size_t k = 0; k < 37; ++k) {
    EXPECT_EQ(a.entries[k].s, b.entries[k].s);
    EXPECT_EQ(a.entries[k].iterations, b.entries[k].iterations);
  }
}

TEST(Solver, ErrorsAndConfiguration) {
  const auto g = make_gamma(0.5);
  IterationConfig<double> one;
  one.max_iter = 1;
  try {
    iterate_fixed_point(g, 8, 3, one);
    FAIL() << "expected NonConvergence";
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.j(), 3u);
    EXPECT_GT(e.residual(), one.tol);
  }
  IterationConfig<double> strict;
  strict.enforce_contraction = true;
  EXPECT_THROW(iterate_fixed_point(g, 8, 1, strict), NotCertified);
  EXPECT_NO_THROW(iterate_fixed_point(g, 64, 1, strict));
  IterationConfig<double> bad;
  bad.tol = 0;
  EXPECT_THROW(iterate_fixed_point(g, 8, 1, bad), DomainError);
  EXPECT_THROW(iterate_fixed_point(g, 1, 1), IndexOutOfRange);
  EXPECT_THROW(iterate_fixed_point(g, 8, 9), IndexOutOfRange);
  EXPECT_THROW(solve_spectrum(g, 1), IndexOutOfRange);
  EXPECT_THROW(iterate_from(g, 8, 1, C{NAN, 0}), DomainError);
}
