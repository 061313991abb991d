// Closed-form eigenvalue estimates and the error metrics that compare them
// with the fixed-point spectrum.

#ifndef CTOEP_ASYMPTOTICS_HPP
#define CTOEP_ASYMPTOTICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "ctoep/core.hpp"
#include "ctoep/solver.hpp"
#include "ctoep/symbol.hpp"

namespace ctoep {

template <typename Real>
struct AsymptoticEstimate {
  std::size_t j;
  std::complex<Real> lambda_asympt;  // second-order expansion at d_{n,j}
  std::complex<Real> lambda_ext0;    // expansion near +2i
  std::complex<Real> lambda_ext1;    // expansion near -2i
  std::complex<Real> s_order2;
};

/// Lambda_{gamma,n}(d) = psi(d) + psi'(d) theta / (n+1)
///                      + (psi'(d) theta theta' + psi''(d) theta^2 / 2) / (n+1)^2.
template <typename Real>
std::complex<Real> lambda_asymptotic(const GammaParameter<Real>& g, std::size_t n, std::size_t j) {
  const auto gp = grid_point<Real>(n, j);
  const std::complex<Real> d{gp.d, 0};
  const auto t = theta(g, d);
  const auto tp = theta_prime(g, d);
  const auto p1 = psi_prime(d);
  const auto p2 = psi_second(d);
  const Real m = static_cast<Real>(n) + 1;
  return psi(d) + p1 * t / m + (p1 * t * tp + p2 * t * t / Real(2)) / (m * m);
}

/// Truncations of the expansion of s_{gamma,n,j} in powers of 1/(n+1):
/// order 0 is d, order 1 adds theta(d)/(n+1), order 2 adds theta theta'/(n+1)^2.
template <typename Real>
std::complex<Real> s_asymptotic(const GammaParameter<Real>& g, std::size_t n, std::size_t j,
                                int order) {
  const auto gp = grid_point<Real>(n, j);
  const std::complex<Real> d{gp.d, 0};
  if (order <= 0) return d;
  const Real m = static_cast<Real>(n) + 1;
  const auto t = theta(g, d);
  if (order == 1) return d + t / m;
  return d + t / m + t * theta_prime(g, d) / (m * m);
}

template <typename Real>
std::complex<Real> s_asymptotic_order2(const GammaParameter<Real>& g, std::size_t n,
                                       std::size_t j) {
  return s_asymptotic(g, n, j, 2);
}

/// 2i - i pi^2 j^2/(n+1)^2 + (2 gamma/(1 + i gamma)) pi^2 j^2/(n+1)^3.
template <typename Real>
std::complex<Real> lambda_extreme_low(const GammaParameter<Real>& g, std::size_t n, std::size_t j) {
  check_index(n, j);
  const std::complex<Real> i{0, 1};
  const Real pi2 = std::numbers::pi_v<Real> * std::numbers::pi_v<Real>;
  const Real m = static_cast<Real>(n) + 1;
  const Real jj = static_cast<Real>(j) * static_cast<Real>(j);
  const auto gm = g.value();
  return Real(2) * i - i * pi2 * jj / (m * m) +
         Real(2) * gm / (Real(1) + i * gm) * pi2 * jj / (m * m * m);
}

/// -2i + i pi^2 u^2 + (2 gamma pi^2/(1 - i gamma)) u^2/(n+1), u = 1 - j/(n+1).
template <typename Real>
std::complex<Real> lambda_extreme_high(const GammaParameter<Real>& g, std::size_t n,
                                       std::size_t j) {
  check_index(n, j);
  const std::complex<Real> i{0, 1};
  const Real pi2 = std::numbers::pi_v<Real> * std::numbers::pi_v<Real>;
  const Real m = static_cast<Real>(n) + 1;
  const Real u = Real(1) - static_cast<Real>(j) / m;
  const auto gm = g.value();
  return Real(-2) * i + i * pi2 * u * u + Real(2) * gm * pi2 / (Real(1) - i * gm) * u * u / m;
}

template <typename Real>
AsymptoticEstimate<Real> asymptotic_estimate(const GammaParameter<Real>& g, std::size_t n,
                                             std::size_t j) {
  return {j, lambda_asymptotic(g, n, j), lambda_extreme_low(g, n, j), lambda_extreme_high(g, n, j),
          s_asymptotic_order2(g, n, j)};
}

/// Spectrum assembled from the second-order expansions.
template <typename Real>
Spectrum<Real> asymptotic_spectrum(const GammaParameter<Real>& g, std::size_t n) {
  Spectrum<Real> spec{g, n, {}, Provenance::asymptotic};
  spec.entries.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    EigenSolution<Real> e;
    e.j = j;
    e.s = s_asymptotic_order2(g, n, j);
    e.lambda = lambda_asymptotic(g, n, j);
    spec.entries.push_back(e);
  }
  return spec;
}

/// E^asympt = max_j |lambda^asympt_j - lambda^fp_j|.
template <typename Real>
Real asymptotic_error(const Spectrum<Real>& fp) {
  Real e = 0;
  for (const auto& s : fp.entries) {
    e = std::max(e, std::abs(lambda_asymptotic(fp.gamma, fp.n, s.j) - s.lambda));
  }
  return e;
}

/// |lambda^{asympt,0}_j - lambda^fp_j|, the +2i end.
template <typename Real>
Real extreme_low_error(const Spectrum<Real>& fp, std::size_t j) {
  check_index(fp.n, j);
  return std::abs(lambda_extreme_low(fp.gamma, fp.n, j) - fp.entries[j - 1].lambda);
}

/// |lambda^{asympt,1}_j - lambda^fp_j|, the -2i end.
template <typename Real>
Real extreme_high_error(const Spectrum<Real>& fp, std::size_t j) {
  check_index(fp.n, j);
  return std::abs(lambda_extreme_high(fp.gamma, fp.n, j) - fp.entries[j - 1].lambda);
}

/// Error scaled by ((n+1)/j)^4, the distance-to-endpoint normalization.
template <typename Real>
Real extreme_low_normalized(const Spectrum<Real>& fp, std::size_t j) {
  const Real r = (static_cast<Real>(fp.n) + 1) / static_cast<Real>(j);
  return extreme_low_error(fp, j) * r * r * r * r;
}

/// Error scaled by ((n+1)/(n+1-j))^4.
template <typename Real>
Real extreme_high_normalized(const Spectrum<Real>& fp, std::size_t j) {
  const Real r = (static_cast<Real>(fp.n) + 1) / static_cast<Real>(fp.n + 1 - j);
  return extreme_high_error(fp, j) * r * r * r * r;
}

/// Small-|gamma| expansion of the eigenvalues of the symmetric companion
/// tridiag(1, 0, 1) + i gamma E_11 (whose spectrum is {i lambda_j}), valid
/// for purely imaginary gamma.
template <typename Real>
struct CFEstimate {
  std::complex<Real> mu_asympt;
  Real c0, c1, c2, c3, c4;
};

template <typename Real>
CFEstimate<Real> cf_estimate(const GammaParameter<Real>& g, std::size_t n, std::size_t k) {
  if (!g.is_imaginary()) throw NotApplicable("cf_estimate requires purely imaginary gamma");
  const auto gp = grid_point<Real>(n, k);
  const Real nn = static_cast<Real>(n);
  const Real m = nn + 1;
  const Real c = std::cos(gp.d);
  const Real s2 = std::sin(gp.d) * std::sin(gp.d);
  CFEstimate<Real> r;
  r.c0 = 2 * c;
  r.c1 = 2 * s2 / m;
  r.c2 = (2 * nn - 1) * s2 * c / (m * m);
  r.c3 = 2 * nn * (nn - 1) * s2 * (4 * c * c - 1) / (3 * m * m * m);
  r.c4 = (2 * nn - 3) * (12 * nn * nn * (2 * c * c - 1) + (2 * nn + 1) * s2) * s2 * c /
         (12 * m * m * m * m);
  const std::complex<Real> i{0, 1};
  const auto gm = g.value();
  const auto g2 = gm * gm;
  r.mu_asympt = r.c0 + i * gm * r.c1 - g2 * r.c2 - i * g2 * gm * r.c3 + g2 * g2 * r.c4;
  return r;
}

/// G^asympt = max over eigenvalues of |mu^asympt - i lambda^fp|. The
/// expansion index k counts from the -2i end of the A spectrum, so
/// mu_k pairs with lambda_{n+1-k}.
template <typename Real>
Real cf_error(const Spectrum<Real>& fp) {
  const std::complex<Real> i{0, 1};
  Real e = 0;
  for (const auto& s : fp.entries) {
    const auto mu = cf_estimate(fp.gamma, fp.n, fp.n + 1 - s.j).mu_asympt;
    e = std::max(e, std::abs(mu - i * s.lambda));
  }
  return e;
}

/// Spectrum of B = i J A J^{-1}, J = diag(i, i^2, ..., i^n): {i lambda_j}.
template <typename Real>
std::vector<std::complex<Real>> b_similarity_spectrum(const Spectrum<Real>& spec) {
  const std::complex<Real> i{0, 1};
  std::vector<std::complex<Real>> out;
  out.reserve(spec.entries.size());
  for (const auto& e : spec.entries) out.push_back(i * e.lambda);
  return out;
}

}  // namespace ctoep

#endif  // CTOEP_ASYMPTOTICS_HPP
