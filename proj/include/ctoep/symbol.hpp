// The analytic machinery behind the eigenvalue equation: the change of
// variables psi, the ratio Q_gamma, the phase function theta_gamma and its
// derivative, plus the certified sup bounds on the half strip.

#ifndef CTOEP_SYMBOL_HPP
#define CTOEP_SYMBOL_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>

#include "ctoep/core.hpp"

namespace ctoep {

namespace detail {

// Points this close to the strip boundary are rejected.
template <typename Real>
constexpr Real strip_guard() {
  return Real(1e-12);
}

template <typename Real>
std::complex<Real> cos_c(std::complex<Real> z) {
  const Real x = z.real(), y = z.imag();
  return {std::cos(x) * std::cosh(y), -std::sin(x) * std::sinh(y)};
}

template <typename Real>
std::complex<Real> sin_c(std::complex<Real> z) {
  const Real x = z.real(), y = z.imag();
  return {std::sin(x) * std::cosh(y), std::cos(x) * std::sinh(y)};
}

template <typename Real>
std::complex<Real> expi(std::complex<Real> z) {
  // exp(i z) = exp(-y) (cos x + i sin x)
  const Real m = std::exp(-z.imag());
  return {m * std::cos(z.real()), m * std::sin(z.real())};
}

template <typename Real>
void require_strip(const GammaParameter<Real>& g, std::complex<Real> z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
  if (!(std::abs(z.imag()) < g.delta() - strip_guard<Real>())) {
    throw DomainError(std::string(what) + ": |Im z| must be below ln(1/|gamma|)");
  }
}

// The two factors 1 + i gamma e^{iz} and 1 + i gamma e^{-iz}.
template <typename Real>
std::pair<std::complex<Real>, std::complex<Real>> q_factors(std::complex<Real> gamma,
                                                            std::complex<Real> z) {
  const std::complex<Real> ig{-gamma.imag(), gamma.real()};
  const std::complex<Real> one{1, 0};
  return {one + ig * expi(z), one + ig * expi(-z)};
}

}  // namespace detail

/// psi(z) = 2 i cos z.
template <typename Real>
std::complex<Real> psi(std::complex<Real> z) {
  const auto c = detail::cos_c(z);
  return {Real(-2) * c.imag(), Real(2) * c.real()};
}

template <typename Real>
std::complex<Real> psi(Real x) {
  return {Real(0), Real(2) * std::cos(x)};
}

/// psi'(z) = -2 i sin z.
template <typename Real>
std::complex<Real> psi_prime(std::complex<Real> z) {
  return std::complex<Real>{0, -2} * detail::sin_c(z);
}

/// psi''(z) = -2 i cos z.
template <typename Real>
std::complex<Real> psi_second(std::complex<Real> z) {
  return -psi(z);
}

/// Strip membership of a point relative to gamma.
template <typename Real>
struct StripPoint {
  std::complex<Real> z;
  bool in_half_strip;  // |Im z| <= Delta/2
  bool in_full_strip;  // |Im z| <  Delta
};

template <typename Real>
StripPoint<Real> classify(const GammaParameter<Real>& g, std::complex<Real> z) {
  const Real y = std::abs(z.imag());
  return {z, y <= g.delta() / 2, y < g.delta()};
}

/// Q_gamma(z) = (1 + i gamma e^{iz}) / (1 + i gamma e^{-iz}).
template <typename Real>
std::complex<Real> q_gamma(const GammaParameter<Real>& g, std::complex<Real> z) {
  detail::require_strip(g, z, "q_gamma");
  const auto [a, b] = detail::q_factors(g.value(), z);
  return a / b;
}

/// theta_gamma(z) = -(i/2) (Log(1 + i gamma e^{iz}) - Log(1 + i gamma e^{-iz})).
///
/// Inside the strip both factors have positive real part, so the difference
/// of principal logarithms equals the principal logarithm of their quotient
/// without ever touching the cut.
template <typename Real>
std::complex<Real> theta(const GammaParameter<Real>& g, std::complex<Real> z) {
  detail::require_strip(g, z, "theta");
  const auto [a, b] = detail::q_factors(g.value(), z);
  const auto diff = std::log(a) - std::log(b);
  return {diff.imag() / 2, -diff.real() / 2};
}

template <typename Real>
std::complex<Real> theta(const GammaParameter<Real>& g, Real x) {
  return theta(g, std::complex<Real>(x, 0));
}

/// theta_gamma(z) = -(i/2) Log(Q_gamma(z)), the single-logarithm form.
template <typename Real>
std::complex<Real> theta_log_quotient(const GammaParameter<Real>& g, std::complex<Real> z) {
  const auto q = q_gamma(g, z);
  const auto l = std::log(q);
  return {l.imag() / 2, -l.real() / 2};
}

/// Difference-of-logarithms form evaluated without the strip restriction.
/// Defined wherever neither factor vanishes; used by the fixed-point solver,
/// whose solutions for small n and |gamma| near 1 can sit outside the strip.
/// Returns false when a factor is zero or an input is non-finite.
template <typename Real>
bool theta_continued(std::complex<Real> gamma, std::complex<Real> z, std::complex<Real>& out) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  const auto [a, b] = detail::q_factors(gamma, z);
  if (a == std::complex<Real>{} || b == std::complex<Real>{}) return false;
  const auto diff = std::log(a) - std::log(b);
  out = {diff.imag() / 2, -diff.real() / 2};
  return std::isfinite(out.real()) && std::isfinite(out.imag());
}

/// theta'(z) = (i gamma cos z - gamma^2) / (1 + 2 i gamma cos z - gamma^2).
template <typename Real>
std::complex<Real> theta_prime(const GammaParameter<Real>& g, std::complex<Real> z) {
  detail::require_strip(g, z, "theta_prime");
  const auto gm = g.value();
  const std::complex<Real> i{0, 1};
  const auto c = detail::cos_c(z);
  return (i * gm * c - gm * gm) / (Real(1) + Real(2) * i * gm * c - gm * gm);
}

/// Same derivative with the factored denominator (1 + i gamma e^{iz})(1 + i gamma e^{-iz}).
template <typename Real>
std::complex<Real> theta_prime_factored(const GammaParameter<Real>& g, std::complex<Real> z) {
  detail::require_strip(g, z, "theta_prime");
  const auto gm = g.value();
  const std::complex<Real> i{0, 1};
  const auto [a, b] = detail::q_factors(gm, z);
  return (i * gm * detail::cos_c(z) - gm * gm) / (a * b);
}

/// theta on [0, pi] through its real/imaginary decomposition: an arctangent
/// difference for the real part and a log-ratio of squared moduli for the
/// imaginary part.
template <typename Real>
std::complex<Real> theta_real_axis(const GammaParameter<Real>& g, Real x) {
  if (!(x >= Real(0) && x <= std::numbers::pi_v<Real>)) {
    throw DomainError("theta_real_axis: x must lie in [0, pi]");
  }
  const Real gr = g.value().real(), gi = g.value().imag();
  const Real c = std::cos(x), s = std::sin(x);
  const Real re = std::atan((gr * c - gi * s) / (1 - gr * s - gi * c)) / 2 -
                  std::atan((gr * c + gi * s) / (1 + gr * s - gi * c)) / 2;
  const Real base = 1 + g.modulus() * g.modulus() - 2 * gi * c;
  const Real im = std::log((base + 2 * gr * s) / (base - 2 * gr * s)) / 4;
  return {re, im};
}

/// sup |theta| over the closed half strip.
template <typename Real>
Real theta_bound(const GammaParameter<Real>& g) {
  return g.m0();
}

/// sup |theta'| over the closed half strip.
template <typename Real>
Real theta_prime_bound(const GammaParameter<Real>& g) {
  return g.m1();
}

}  // namespace ctoep

#endif  // CTOEP_SYMBOL_HPP
