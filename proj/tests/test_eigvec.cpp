#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "ctoep/eigvec.hpp"
#include "ctoep/solver.hpp"

using namespace ctoep;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(Eigenvector, FirstComponent) {
  const C s{0.7, 0.05};
  const auto v = eigenvector_trig(C{0.4, 0.1}, 5, s);
  EXPECT_LT(std::abs(v(0) - C{0, -1} * std::sin(s)), 1e-15);
}

TEST(Eigenvector, UnperturbedLimitIsSineVector) {
  const std::size_t n = 7;
  const PerturbedMatrix<double> t{C{0, 0}, n};
  for (std::size_t k = 1; k <= n; ++k) {
    const double s = k * kPi / (n + 1);
    const auto v = eigenvector_trig(C{0, 0}, n, C{s, 0});
    for (std::size_t m = 1; m <= n; ++m) {
      const C expected = std::pow(C{0, -1}, static_cast<int>(m)) * std::sin(m * s);
      EXPECT_LT(std::abs(v(m - 1) - expected), 1e-14);
    }
    EXPECT_LT(eigen_residual(t, psi(C{s, 0}), v), 1e-14);
  }
}

TEST(Eigenvector, ResidualsSmallAtFixedPoints) {
  const auto g = make_gamma(0.5);
  const auto spec = solve_spectrum(g, 16);
  for (const auto& e : spec.entries) {
    const auto ev = eigenvector_components(g, 16, e);
    EXPECT_LE(ev.residual, 1e-11) << e.j;
    EXPECT_LE(ev.scaled_residual, ev.residual);
  }
}

TEST(Eigenvector, ParallelToDenseEigenvector) {
  const auto g = make_gamma(0.4, -5.0 / 6);
  const std::size_t n = 20;
  const auto a = dense_matrix(PerturbedMatrix<double>{g.value(), n});
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
  for (const auto& e : solve_spectrum(g, n).entries) {
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k)
      if (std::abs(es.eigenvalues()(k) - e.lambda) < std::abs(es.eigenvalues()(best) - e.lambda))
        best = k;
    const auto v = eigenvector_trig(g.value(), n, e.s);
    const Eigen::VectorXcd w = es.eigenvectors().col(best);
    const double cosang = std::abs(v.dot(w)) / (v.norm() * w.norm());
    EXPECT_NEAR(cosang, 1.0, 1e-10) << e.j;
  }
}

TEST(Eigenvector, ChebyshevFormIsScaledTrigForm) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 200; ++k) {
    const C gamma = std::polar(0.9 * u(rng), 2 * kPi * u(rng));
    const C s{0.1 + 2.9 * u(rng), 0.2 * (u(rng) - 0.5)};
    const std::size_t n = 1 + static_cast<std::size_t>(63 * u(rng));
    const auto trig = eigenvector_trig(gamma, n, s);
    const auto cheb = eigenvector_chebyshev(gamma, n, psi(s));
    const C factor = -std::sin(s);
    EXPECT_LT((trig - factor * cheb).norm(), 1e-10 * trig.norm());
  }
}

TEST(Norm, ClosedFormMatchesDirectSum) {
  for (const auto& g : {make_gamma(0.5), make_gamma(0.0, 1.0 / 3), make_gamma(0.4, -5.0 / 6)}) {
    const std::size_t n = 32;
    for (const auto& e : solve_spectrum(g, n).entries) {
      const auto ev = eigenvector_components(g, n, e);
      EXPECT_LT(std::abs(ev.norm_sq_closed - ev.norm_sq_direct), 1e-10 * ev.norm_sq_direct)
          << g.value() << " j=" << e.j;
    }
  }
}

TEST(Norm, RealParameterLimit) {
  const std::size_t n = 9;
  const double s = 0.8;
  const auto cf = norm_closed_form(C{0, 0}, C{s, 0}, n);
  EXPECT_TRUE(cf.beta_limit);
  // Sum of sin^2(k s) = n/2 - sin(n s) cos((n+1) s) / (2 sin s).
  double direct = 0;
  for (std::size_t k = 1; k <= n; ++k) direct += std::sin(k * s) * std::sin(k * s);
  EXPECT_NEAR(cf.value, direct, 1e-13);
  EXPECT_NEAR(cf.value, n / 2.0 - std::sin(n * s) * std::cos((n + 1) * s) / (2 * std::sin(s)), 1e-13);
}

TEST(Norm, CosineSumIdentity) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.01, kPi - 0.01);
  for (int k = 0; k < 50; ++k) {
    const double s = u(rng);
    for (std::size_t n : {1u, 5u, 40u}) {
      double sum = 0;
      for (std::size_t m = 1; m <= n; ++m) sum += std::cos(2.0 * m * s);
      EXPECT_NEAR(sum, std::sin(n * s) * std::cos((n + 1) * s) / std::sin(s), 1e-12);
    }
  }
}

TEST(Eigenvector, DistinctEigenvaluesGiveIndependentVectors) {
  const auto g = make_gamma(0.5);
  const std::size_t n = 12;
  const auto spec = solve_spectrum(g, n);
  Eigen::MatrixXcd v(n, n);
  for (std::size_t j = 0; j < n; ++j) v.col(j) = eigenvector_trig(g.value(), n, spec.entries[j].s).normalized();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(v.adjoint() * v, false);
  double smallest = INFINITY;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) smallest = std::min(smallest, std::abs(es.eigenvalues()(k)));
  EXPECT_GT(smallest, 1e-6);
}

TEST(Eigenvector, DegenerateParameterRejected) {
  const auto g = make_gamma(0.5);
  EigenSolution<double> sol;
  sol.j = 1;
  sol.s = C{0, 0};
  sol.lambda = psi(sol.s);
  EXPECT_THROW(eigenvector_components(g, 4, sol), DegenerateError);
  EXPECT_THROW(norm_closed_form(C{0.5, 0}, C{kPi, 0.1}, 4), DegenerateError);
}
