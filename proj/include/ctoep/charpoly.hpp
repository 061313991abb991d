// Characteristic polynomial D_{gamma,n}(lambda) = det(lambda I - A) in its
// Chebyshev and trigonometric forms, the matrix itself, and the unperturbed
// spectrum. These functions accept any complex gamma (including 0).

#ifndef CTOEP_CHARPOLY_HPP
#define CTOEP_CHARPOLY_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ctoep/core.hpp"
#include "ctoep/symbol.hpp"

namespace ctoep {

template <typename Real>
using VectorXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixXc = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// i^k for integer k, exact.
template <typename Real>
std::complex<Real> ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

/// (-i)^k for integer k, exact.
template <typename Real>
std::complex<Real> minus_ipow(long k) {
  return ipow<Real>(-k);
}

/// U_n(x) by the forward three-term recurrence; U_{-1} = 0, U_0 = 1.
template <typename Real>
std::complex<Real> chebyshev_u(long n, std::complex<Real> x) {
  if (n < -1) throw DomainError("chebyshev_u: degree must be >= -1");
  if (n == -1) return {0, 0};
  std::complex<Real> prev{0, 0}, cur{1, 0};
  const auto two_x = Real(2) * x;
  for (long k = 1; k <= n; ++k) {
    auto next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// The pair (U_n(x), U_{n-1}(x)) from a single recurrence pass.
template <typename Real>
std::pair<std::complex<Real>, std::complex<Real>> chebyshev_u_pair(long n, std::complex<Real> x) {
  std::complex<Real> prev{0, 0}, cur{1, 0};
  const auto two_x = Real(2) * x;
  for (long k = 1; k <= n; ++k) {
    auto next = two_x * cur - prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

/// D(lambda) = i^n (U_n(-i lambda/2) + i gamma U_{n-1}(-i lambda/2)).
template <typename Real>
std::complex<Real> charpoly_chebyshev(std::complex<Real> gamma, std::size_t n,
                                      std::complex<Real> lambda) {
  const std::complex<Real> i{0, 1};
  const auto x = -i * lambda / Real(2);
  const auto [un, un1] = chebyshev_u_pair(static_cast<long>(n), x);
  return ipow<Real>(static_cast<long>(n)) * (un + i * gamma * un1);
}

namespace detail {

template <typename Real>
constexpr Real pole_guard() {
  return Real(1e-10);
}

// Near z in pi Z the quotient by sin z is a removable singularity; evaluate
// U_n(cos z) directly instead.
template <typename Real>
std::complex<Real> charpoly_at_pole(std::complex<Real> gamma, std::size_t n, std::complex<Real> z) {
  const std::complex<Real> i{0, 1};
  const auto [un, un1] = chebyshev_u_pair(static_cast<long>(n), cos_c(z));
  return ipow<Real>(static_cast<long>(n)) * (un + i * gamma * un1);
}

}  // namespace detail

/// D(psi(z)) = i^n (sin((n+1)z) + i gamma sin(nz)) / sin z.
template <typename Real>
std::complex<Real> charpoly_trig(std::complex<Real> gamma, std::size_t n, std::complex<Real> z) {
  const auto sz = detail::sin_c(z);
  if (std::abs(sz) < detail::pole_guard<Real>()) return detail::charpoly_at_pole(gamma, n, z);
  const std::complex<Real> i{0, 1};
  const auto nn = static_cast<Real>(n);
  const auto num = detail::sin_c((nn + 1) * z) + i * gamma * detail::sin_c(nn * z);
  return ipow<Real>(static_cast<long>(n)) * num / sz;
}

/// D(psi(z)) = i^n ((1 + i gamma cos z) sin((n+1)z) - i gamma sin z cos((n+1)z)) / sin z.
template <typename Real>
std::complex<Real> charpoly_trig2(std::complex<Real> gamma, std::size_t n, std::complex<Real> z) {
  const auto sz = detail::sin_c(z);
  if (std::abs(sz) < detail::pole_guard<Real>()) return detail::charpoly_at_pole(gamma, n, z);
  const std::complex<Real> i{0, 1};
  const auto m = static_cast<Real>(n) + 1;
  const auto num = (Real(1) + i * gamma * detail::cos_c(z)) * detail::sin_c(m * z) -
                   i * gamma * sz * detail::cos_c(m * z);
  return ipow<Real>(static_cast<long>(n)) * num / sz;
}

/// |exp(2i(n+1)z) - Q_gamma(z)|; zero exactly at eigenvalue parameters.
template <typename Real>
Real exponential_residual(const GammaParameter<Real>& g, std::size_t n, std::complex<Real> z) {
  const auto m = static_cast<Real>(n) + 1;
  return std::abs(detail::expi(Real(2) * m * z) - q_gamma(g, z));
}

/// Tridiagonal A(gamma, n): subdiagonal +1, superdiagonal -1, A_11 = gamma.
/// Stored implicitly; only tests build it densely.
template <typename Real>
struct PerturbedMatrix {
  std::complex<Real> gamma;
  std::size_t n;
};

template <typename Real>
VectorXc<Real> matvec(const PerturbedMatrix<Real>& m, const VectorXc<Real>& v) {
  const auto n = static_cast<Eigen::Index>(m.n);
  if (v.size() != n) throw DimensionMismatch("matvec: vector length differs from matrix order");
  VectorXc<Real> out(n);
  if (n == 1) {
    out(0) = m.gamma * v(0);
    return out;
  }
  out(0) = m.gamma * v(0) - v(1);
  for (Eigen::Index k = 1; k + 1 < n; ++k) out(k) = v(k - 1) - v(k + 1);
  out(n - 1) = v(n - 2);
  return out;
}

template <typename Real>
MatrixXc<Real> dense_matrix(const PerturbedMatrix<Real>& m) {
  const auto n = static_cast<Eigen::Index>(m.n);
  MatrixXc<Real> a = MatrixXc<Real>::Zero(n, n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    a(k + 1, k) = 1;
    a(k, k + 1) = -1;
  }
  a(0, 0) = m.gamma;
  return a;
}

/// Infinity norm of A, used to scale residuals.
template <typename Real>
Real infinity_norm(const PerturbedMatrix<Real>& m) {
  if (m.n == 1) return std::abs(m.gamma);
  if (m.n == 2) return std::max(std::abs(m.gamma) + 1, Real(1));
  return std::max(std::abs(m.gamma) + 1, Real(2));
}

/// Eigenvalues of the unperturbed T_n: 2i cos(k pi/(n+1)), k = 1..n.
template <typename Real = double>
std::vector<std::complex<Real>> unperturbed_eigenvalues(std::size_t n) {
  if (n < 1) throw DomainError("unperturbed_eigenvalues: n must be >= 1");
  std::vector<std::complex<Real>> out;
  out.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Real x = static_cast<Real>(k) * std::numbers::pi_v<Real> / static_cast<Real>(n + 1);
    out.push_back(psi(x));
  }
  return out;
}

/// (|D(2i)|, |D(-2i)|) = (|n+1 + i gamma n|, |n+1 - i gamma n|). Both exceed 1
/// whenever |gamma| < 1, so +-2i are never eigenvalues.
template <typename Real>
std::pair<Real, Real> not_eigenvalue_check(std::complex<Real> gamma, std::size_t n) {
  const std::complex<Real> i{0, 1};
  const auto nn = static_cast<Real>(n);
  return {std::abs(nn + 1 + i * gamma * nn), std::abs(nn + 1 - i * gamma * nn)};
}

}  // namespace ctoep

#endif  // CTOEP_CHARPOLY_HPP
