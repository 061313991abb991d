// Fixed-point engine for the main equation
//
//     z = j pi / (n + 1) + theta_gamma(z) / (n + 1),
//
// whose solutions s_{gamma,n,j} give the eigenvalues lambda_j = psi(s_j).

#ifndef CTOEP_SOLVER_HPP
#define CTOEP_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ctoep/charpoly.hpp"
#include "ctoep/core.hpp"
#include "ctoep/symbol.hpp"

namespace ctoep {

template <typename Real>
struct IterationConfig {
  Real tol = Real(1e-14);
  std::size_t max_iter = 200;
  // Refuse orders below the proven contraction threshold and require the
  // fixed point to land in the localization ball.
  bool enforce_contraction = false;
};

/// Raised when an index fails to converge; carries the failing j.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, std::size_t j, std::complex<double> last, double residual)
      : Error(what + " (j=" + std::to_string(j) + ")"), j_(j), last_(last), residual_(residual) {}

  std::size_t j() const { return j_; }
  std::complex<double> last_iterate() const { return last_; }
  double residual() const { return residual_; }

 private:
  std::size_t j_;
  std::complex<double> last_;
  double residual_;
};

class NonConvergence : public SolveError {
 public:
  using SolveError::SolveError;
};

class DomainEscape : public SolveError {
 public:
  using SolveError::SolveError;
};

class NotCertified : public Error {
 public:
  using Error::Error;
};

/// f_{gamma,n,j}(z) with theta continued beyond the strip. Returns false if
/// the logarithms are undefined at z.
template <typename Real>
bool main_map(const GammaParameter<Real>& g, std::size_t n, std::size_t j, std::complex<Real> z,
              std::complex<Real>& out) {
  std::complex<Real> t;
  if (!theta_continued(g.value(), z, t)) return false;
  const Real m = static_cast<Real>(n) + 1;
  out = static_cast<Real>(j) * std::numbers::pi_v<Real> / m + t / m;
  return true;
}

/// p_{gamma,n,j} = d + theta(d) / (n + 1), the iteration seed.
template <typename Real>
std::complex<Real> first_approximation(const GammaParameter<Real>& g, std::size_t n, std::size_t j) {
  const auto gp = grid_point<Real>(n, j);
  return gp.d + theta(g, gp.d) / (static_cast<Real>(n) + 1);
}

/// The localization disk around p_{gamma,n,j} of radius M_gamma / (n+1)^2.
template <typename Real>
struct BallDescriptor {
  std::complex<Real> center;
  Real radius;

  bool contains(std::complex<Real> z) const { return std::abs(z - center) <= radius; }
};

template <typename Real>
BallDescriptor<Real> localization_ball(const GammaParameter<Real>& g, std::size_t n, std::size_t j) {
  const Real m = static_cast<Real>(n) + 1;
  return {first_approximation(g, n, j), g.m_ball() / (m * m)};
}

/// Iterates f_{gamma,n,j} from an arbitrary start point.
template <typename Real>
EigenSolution<Real> iterate_from(const GammaParameter<Real>& g, std::size_t n, std::size_t j,
                                 std::complex<Real> start, const IterationConfig<Real>& cfg = {}) {
  if (n < 2) throw IndexOutOfRange("iterate_from: order must be >= 2");
  check_index(n, j);
  if (!(cfg.tol > Real(0)) || cfg.max_iter < 1) throw DomainError("invalid iteration config");
  const bool certified = g.certified(n);
  if (cfg.enforce_contraction && !certified) {
    throw NotCertified("order " + std::to_string(n) + " below contraction threshold");
  }

  auto as_double = [](std::complex<Real> z) {
    return std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  };

  if (!std::isfinite(start.real()) || !std::isfinite(start.imag())) {
    throw DomainError("iterate_from: non-finite start point");
  }
  std::complex<Real> z = start;
  Real step = std::numeric_limits<Real>::infinity();
  std::size_t it = 0;
  while (it < cfg.max_iter) {
    std::complex<Real> next;
    if (!main_map(g, n, j, z, next)) {
      throw DomainEscape("fixed-point iterate left the domain of theta", j, as_double(z),
                         static_cast<double>(step));
    }
    ++it;
    step = std::abs(next - z);
    z = next;
    if (step <= cfg.tol) break;
  }
  if (!(step <= cfg.tol)) {
    throw NonConvergence("fixed-point iteration did not converge", j, as_double(z),
                         static_cast<double>(step));
  }

  std::complex<Real> fz;
  if (!main_map(g, n, j, z, fz)) {
    throw DomainEscape("fixed point outside the domain of theta", j, as_double(z),
                       static_cast<double>(step));
  }
  if (cfg.enforce_contraction && !localization_ball(g, n, j).contains(z)) {
    throw DomainEscape("fixed point outside the localization ball", j, as_double(z),
                       static_cast<double>(step));
  }

  EigenSolution<Real> sol;
  sol.j = j;
  sol.s = z;
  sol.lambda = psi(z);
  sol.iterations = it;
  sol.fp_residual = std::abs(z - fz);
  sol.error_bound = 2 * step;
  sol.charpoly_residual = std::abs(charpoly_trig(g.value(), n, z));
  sol.in_strip = std::abs(z.imag()) < g.delta();
  return sol;
}

/// Iterates from the seed p_{gamma,n,j}.
template <typename Real>
EigenSolution<Real> iterate_fixed_point(const GammaParameter<Real>& g, std::size_t n,
                                        std::size_t j, const IterationConfig<Real>& cfg = {}) {
  if (n < 2) throw IndexOutOfRange("iterate_fixed_point: order must be >= 2");
  check_index(n, j);
  return iterate_from(g, n, j, first_approximation(g, n, j), cfg);
}

/// All n eigenvalue parameters, ordered by j.
template <typename Real>
Spectrum<Real> solve_spectrum(const GammaParameter<Real>& g, std::size_t n,
                              const IterationConfig<Real>& cfg = {}) {
  if (n < 2) throw IndexOutOfRange("solve_spectrum: order must be >= 2");
  Spectrum<Real> spec{g, n, {}, Provenance::fixed_point};
  spec.entries.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) spec.entries.push_back(iterate_fixed_point(g, n, j, cfg));
  return spec;
}

/// 0 < Re s_1 < ... < Re s_n < pi.
template <typename Real>
bool strictly_ordered(const Spectrum<Real>& spec) {
  Real prev = 0;
  for (const auto& e : spec.entries) {
    if (!(e.s.real() > prev)) return false;
    prev = e.s.real();
  }
  return prev < std::numbers::pi_v<Real>;
}

template <typename Real>
struct ContractionCertificate {
  Real factor;      // sampled sup over the ball of |theta'| / (n + 1)
  bool guaranteed;  // n >= N_gamma; otherwise the value is advisory only

  bool contracts() const { return factor <= Real(0.5); }
};

/// Samples |f'| = |theta'| / (n + 1) on the localization ball: the center plus
/// concentric rings out to the boundary.
template <typename Real>
ContractionCertificate<Real> contraction_certificate(const GammaParameter<Real>& g, std::size_t n,
                                                     std::size_t j, int rings = 8,
                                                     int angles = 64) {
  const auto ball = localization_ball(g, n, j);
  const auto gm = g.value();
  const std::complex<Real> i{0, 1};
  auto deriv = [&](std::complex<Real> z) {
    const auto c = detail::cos_c(z);
    return std::abs((i * gm * c - gm * gm) / (Real(1) + Real(2) * i * gm * c - gm * gm));
  };
  Real sup = deriv(ball.center);
  for (int r = 1; r <= rings; ++r) {
    const Real rad = ball.radius * static_cast<Real>(r) / static_cast<Real>(rings);
    for (int a = 0; a < angles; ++a) {
      const Real phi = Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(a) / angles;
      sup = std::max(sup, deriv(ball.center + std::polar(rad, phi)));
    }
  }
  return {sup / (static_cast<Real>(n) + 1), g.certified(n)};
}

}  // namespace ctoep

#endif  // CTOEP_SOLVER_HPP
