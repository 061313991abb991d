// Parameter objects and shared record types for the corner-perturbed
// tridiagonal Toeplitz family A(gamma, n) = T_n(t - 1/t) + gamma * E_11.

#ifndef CTOEP_CORE_HPP
#define CTOEP_CORE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctoep {

// Error hierarchy. Every failure raised by the library derives from Error so
// callers can catch one type at the boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGamma : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateError : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Validated perturbation parameter 0 < |gamma| < 1 together with the
/// constants derived from it:
///
///   delta       = ln(1/|gamma|)             half-width of the analyticity strip
///   m0          = 4 / (1 - |gamma|)         sup |theta| on the half strip
///   m1          = 8 sqrt|gamma| / (1-|gamma|)^2   sup |theta'| on the half strip
///   m_ball      = 64 sqrt|gamma| / (1-|gamma|)^3  ball radius numerator (= 2 m0 m1)
///   n_threshold = 16 / (1 - |gamma|)^2      order above which contraction is proven
template <typename Real>
class GammaParameter {
 public:
  using Complex = std::complex<Real>;

  explicit GammaParameter(Complex gamma) : gamma_(gamma) {
    if (!std::isfinite(gamma.real()) || !std::isfinite(gamma.imag())) {
      throw InvalidGamma("gamma must be finite");
    }
    const Real r = std::abs(gamma);
    if (!(r > Real(0)) || !(r < Real(1))) {
      throw InvalidGamma("gamma must satisfy 0 < |gamma| < 1");
    }
    modulus_ = r;
    delta_ = -std::log(r);
    const Real q = Real(1) - r;
    const Real sr = std::sqrt(r);
    m0_ = Real(4) / q;
    m1_ = Real(8) * sr / (q * q);
    m_ball_ = Real(64) * sr / (q * q * q);
    n_threshold_ = Real(16) / (q * q);
  }

  Complex value() const { return gamma_; }
  Real modulus() const { return modulus_; }
  Real delta() const { return delta_; }
  Real m0() const { return m0_; }
  Real m1() const { return m1_; }
  Real m_ball() const { return m_ball_; }
  Real n_threshold() const { return n_threshold_; }

  /// True if the real part vanishes to within a few ulps of |gamma|.
  bool is_imaginary() const {
    return std::abs(gamma_.real()) <= Real(8) * std::numeric_limits<Real>::epsilon() * modulus_;
  }
  bool is_real() const {
    return std::abs(gamma_.imag()) <= Real(8) * std::numeric_limits<Real>::epsilon() * modulus_;
  }

  /// Whether the contraction theorem applies at order n.
  bool certified(std::size_t n) const { return static_cast<Real>(n) >= n_threshold_; }

 private:
  Complex gamma_;
  Real modulus_{};
  Real delta_{};
  Real m0_{};
  Real m1_{};
  Real m_ball_{};
  Real n_threshold_{};
};

template <typename Real>
GammaParameter<Real> make_gamma(std::complex<Real> gamma) {
  return GammaParameter<Real>(gamma);
}

inline GammaParameter<double> make_gamma(double re, double im = 0.0) {
  return GammaParameter<double>({re, im});
}

/// gamma = r * exp(2 pi i q), the polar ladder used for parameter sweeps.
template <typename Real = double>
GammaParameter<Real> make_gamma_polar(Real r, Real turn_fraction) {
  const Real angle = Real(2) * std::numbers::pi_v<Real> * turn_fraction;
  return GammaParameter<Real>(std::polar(r, angle));
}

/// Uniform grid point d_{n,j} = j pi / (n + 1), 1 <= j <= n.
template <typename Real>
struct GridPoint {
  std::size_t n;
  std::size_t j;
  Real d;
};

inline void check_index(std::size_t n, std::size_t j) {
  if (n < 1 || j < 1 || j > n) {
    throw IndexOutOfRange("index j=" + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
}

template <typename Real = double>
GridPoint<Real> grid_point(std::size_t n, std::size_t j) {
  check_index(n, j);
  return {n, j, static_cast<Real>(j) * std::numbers::pi_v<Real> / static_cast<Real>(n + 1)};
}

/// One eigenpair parameter record: the fixed point s and lambda = psi(s).
template <typename Real>
struct EigenSolution {
  using Complex = std::complex<Real>;

  std::size_t j = 0;
  Complex s;
  Complex lambda;
  std::size_t iterations = 0;
  Real fp_residual = 0;        // |s - f(s)|
  Real error_bound = 0;        // 2 * last step when the map contracts by 1/2
  Real charpoly_residual = 0;  // |D(psi(s))| in trigonometric form
  bool in_strip = true;        // |Im s| < Delta_gamma
};

enum class Provenance { fixed_point, oracle, asymptotic };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::fixed_point:
      return "fixed_point";
    case Provenance::oracle:
      return "oracle";
    case Provenance::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

/// The full spectrum for one (gamma, n), entries ordered by j.
template <typename Real>
struct Spectrum {
  GammaParameter<Real> gamma;
  std::size_t n;
  std::vector<EigenSolution<Real>> entries;
  Provenance provenance;

  std::vector<std::complex<Real>> eigenvalues() const {
    std::vector<std::complex<Real>> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.lambda);
    return out;
  }
};

}  // namespace ctoep

#endif  // CTOEP_CORE_HPP
