// Eigenvectors of A(gamma, n) from a solved eigenvalue parameter s, their
// closed-form squared norms, and matvec residuals.

#ifndef CTOEP_EIGVEC_HPP
#define CTOEP_EIGVEC_HPP

#include <cmath>
#include <complex>
#include <cstddef>

#include "ctoep/charpoly.hpp"
#include "ctoep/core.hpp"
#include "ctoep/symbol.hpp"

namespace ctoep {

/// mu = 1 + i gamma cos s, nu = i gamma sin s, xi = (i - gamma cos s) conj(gamma sin s).
template <typename Real>
struct NormCoefficients {
  std::complex<Real> mu;
  std::complex<Real> nu;
  std::complex<Real> xi;
};

template <typename Real>
NormCoefficients<Real> norm_coefficients(std::complex<Real> gamma, std::complex<Real> s) {
  const std::complex<Real> i{0, 1};
  const auto c = detail::cos_c(s);
  const auto sn = detail::sin_c(s);
  return {Real(1) + i * gamma * c, i * gamma * sn, (i - gamma * c) * std::conj(gamma * sn)};
}

/// v_k = (-i)^k (sin(k s) + i gamma sin((k-1) s)), k = 1..n.
template <typename Real>
VectorXc<Real> eigenvector_trig(std::complex<Real> gamma, std::size_t n, std::complex<Real> s) {
  const std::complex<Real> i{0, 1};
  VectorXc<Real> v(static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    const auto kk = static_cast<Real>(k);
    v(static_cast<Eigen::Index>(k - 1)) =
        minus_ipow<Real>(static_cast<long>(k)) *
        (detail::sin_c(kk * s) + i * gamma * detail::sin_c((kk - 1) * s));
  }
  return v;
}

/// v_k = (-i)^{k+2} (U_{k-1}(x) + i gamma U_{k-2}(x)), x = -i lambda / 2.
/// Equals -eigenvector_trig / sin(s) when lambda = psi(s).
template <typename Real>
VectorXc<Real> eigenvector_chebyshev(std::complex<Real> gamma, std::size_t n,
                                     std::complex<Real> lambda) {
  const std::complex<Real> i{0, 1};
  const auto two_x = -i * lambda;
  VectorXc<Real> v(static_cast<Eigen::Index>(n));
  std::complex<Real> um2{0, 0}, um1{1, 0};  // U_{k-2}, U_{k-1} for k = 1
  for (std::size_t k = 1; k <= n; ++k) {
    v(static_cast<Eigen::Index>(k - 1)) =
        minus_ipow<Real>(static_cast<long>(k) + 2) * (um1 + i * gamma * um2);
    const auto next = two_x * um1 - um2;
    um2 = um1;
    um1 = next;
  }
  return v;
}

template <typename Real>
struct ClosedFormNorm {
  Real value;
  bool beta_limit;  // |Im s| small enough that the hyperbolic quotients use their limits
};

/// Squared 2-norm of eigenvector_trig(gamma, n, s) without summing:
///
///   (|nu|^2 - |mu|^2)/2 * sin(n a) cos((n+1) a) / sin a
/// + (|nu|^2 + |mu|^2)/2 * sinh(n b) cosh((n+1) b) / sinh b
/// + Re(xi) * sin(n a) sin((n+1) a) / sin a
/// - Im(xi) * sinh(n b) sinh((n+1) b) / sinh b,          s = a + i b.
template <typename Real>
ClosedFormNorm<Real> norm_closed_form(std::complex<Real> gamma, std::complex<Real> s,
                                      std::size_t n) {
  const Real a = s.real(), b = s.imag();
  const Real sa = std::sin(a);
  if (std::abs(sa) < Real(1e-12)) throw DegenerateError("norm_closed_form: sin(Re s) vanishes");
  const auto nn = static_cast<Real>(n);
  const auto cf = norm_coefficients(gamma, s);
  const Real mu2 = std::norm(cf.mu), nu2 = std::norm(cf.nu);

  const Real trig_cos = std::sin(nn * a) * std::cos((nn + 1) * a) / sa;
  const Real trig_sin = std::sin(nn * a) * std::sin((nn + 1) * a) / sa;
  const bool limit = std::abs(b) < Real(1e-10);
  Real hyp_cosh, hyp_sinh;
  if (limit) {
    hyp_cosh = nn;
    hyp_sinh = 0;
  } else {
    const Real sb = std::sinh(b);
    hyp_cosh = std::sinh(nn * b) * std::cosh((nn + 1) * b) / sb;
    hyp_sinh = std::sinh(nn * b) * std::sinh((nn + 1) * b) / sb;
  }
  const Real value = (nu2 - mu2) / 2 * trig_cos + (nu2 + mu2) / 2 * hyp_cosh +
                     cf.xi.real() * trig_sin - cf.xi.imag() * hyp_sinh;
  return {value, limit};
}

/// ||A v - lambda v||_2 / ||v||_2.
template <typename Real>
Real eigen_residual(const PerturbedMatrix<Real>& m, std::complex<Real> lambda,
                    const VectorXc<Real>& v) {
  return (matvec(m, v) - lambda * v).norm() / v.norm();
}

template <typename Real>
struct Eigenvector {
  std::size_t j;
  VectorXc<Real> components;
  Real norm_sq_closed;
  Real norm_sq_direct;
  Real residual;         // ||Av - lambda v|| / ||v||
  Real scaled_residual;  // residual / ||A||_inf
};

template <typename Real>
Eigenvector<Real> eigenvector_components(const GammaParameter<Real>& g, std::size_t n,
                                         const EigenSolution<Real>& sol) {
  if (std::abs(detail::sin_c(sol.s)) < Real(1e-12)) {
    throw DegenerateError("eigenvector_components: sin(s) vanishes");
  }
  Eigenvector<Real> ev;
  ev.j = sol.j;
  ev.components = eigenvector_trig(g.value(), n, sol.s);
  ev.norm_sq_direct = ev.components.squaredNorm();
  ev.norm_sq_closed = norm_closed_form(g.value(), sol.s, n).value;
  const PerturbedMatrix<Real> m{g.value(), n};
  ev.residual = eigen_residual(m, sol.lambda, ev.components);
  ev.scaled_residual = ev.residual / infinity_norm(m);
  return ev;
}

}  // namespace ctoep

#endif  // CTOEP_EIGVEC_HPP
