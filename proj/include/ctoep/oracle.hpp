// Ground truth independent of the fixed-point route: characteristic
// polynomial coefficients from the tridiagonal determinant recurrence, a
// simultaneous (Aberth-Ehrlich) polynomial root finder, and greedy matching
// of two eigenvalue lists.

#ifndef CTOEP_ORACLE_HPP
#define CTOEP_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "ctoep/charpoly.hpp"
#include "ctoep/core.hpp"

namespace ctoep {

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class RootConvergenceFailure : public Error {
 public:
  RootConvergenceFailure(const std::string& what, std::size_t iterations, double max_correction)
      : Error(what), iterations_(iterations), max_correction_(max_correction) {}
  std::size_t iterations() const { return iterations_; }
  double max_correction() const { return max_correction_; }

 private:
  std::size_t iterations_;
  double max_correction_;
};

class CardinalityMismatch : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2; just enough double-double
// arithmetic for accurate Horner evaluation.
template <typename Real>
struct DoubleWord {
  Real hi = 0, lo = 0;
};

template <typename Real>
DoubleWord<Real> two_sum(Real a, Real b) {
  const Real s = a + b;
  const Real bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

template <typename Real>
DoubleWord<Real> dw_add(DoubleWord<Real> x, DoubleWord<Real> y) {
  auto s = two_sum(x.hi, y.hi);
  auto t = two_sum(x.lo, y.lo);
  s.lo += t.hi;
  s = two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return two_sum(s.hi, s.lo);
}

template <typename Real>
DoubleWord<Real> dw_mul(DoubleWord<Real> x, Real y) {
  const Real p = x.hi * y;
  const Real e = std::fma(x.hi, y, -p);
  return two_sum(p, std::fma(x.lo, y, e));
}

template <typename Real>
DoubleWord<Real> dw_neg(DoubleWord<Real> x) {
  return {-x.hi, -x.lo};
}

template <typename Real>
struct ComplexWord {
  DoubleWord<Real> re, im;
};

template <typename Real>
ComplexWord<Real> cw_add(ComplexWord<Real> x, ComplexWord<Real> y) {
  return {dw_add(x.re, y.re), dw_add(x.im, y.im)};
}

template <typename Real>
ComplexWord<Real> cw_mul(ComplexWord<Real> x, std::complex<Real> y) {
  return {dw_add(dw_mul(x.re, y.real()), dw_neg(dw_mul(x.im, y.imag()))),
          dw_add(dw_mul(x.re, y.imag()), dw_mul(x.im, y.real()))};
}

template <typename Real>
ComplexWord<Real> cw_neg(ComplexWord<Real> x) {
  return {dw_neg(x.re), dw_neg(x.im)};
}

/// sum_k (c_k + tail_k) x^k by Horner's rule in double-word arithmetic, then
/// rounded; `tail` may be empty.
template <typename Real>
std::complex<Real> horner_accurate(const std::vector<std::complex<Real>>& c,
                                   const std::vector<std::complex<Real>>& tail,
                                   std::complex<Real> x) {
  ComplexWord<Real> acc;
  for (std::size_t k = c.size(); k-- > 0;) {
    const std::complex<Real> t = tail.empty() ? std::complex<Real>{} : tail[k];
    acc = cw_add(cw_mul(acc, x), ComplexWord<Real>{{c[k].real(), t.real()}, {c[k].imag(), t.imag()}});
  }
  return {acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo};
}

}  // namespace detail

/// Monic coefficient vector in ascending degree. When present, `tail` holds
/// the low-order words: the exact coefficient is coeffs[k] + tail[k].
template <typename Real>
struct CharPolyCoefficients {
  std::vector<std::complex<Real>> coeffs;
  std::vector<std::complex<Real>> tail;

  std::size_t degree() const { return coeffs.size() - 1; }

  std::complex<Real> operator()(std::complex<Real> x) const {
    std::complex<Real> acc{0, 0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// sum_k |c_k| |x|^k, the natural scale for a residual |p(x)|.
  Real magnitude_scale(std::complex<Real> x) const {
    Real acc = 0;
    const Real ax = std::abs(x);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * ax + std::abs(*it);
    return acc;
  }
};

constexpr std::size_t kMaxCoefficientOrder = 40;

/// Determinants of the leading blocks of lambda I - A:
/// p_0 = 1, p_1 = lambda - gamma, p_k = lambda p_{k-1} + p_{k-2}.
template <typename Real>
std::complex<Real> charpoly_recurrence(std::complex<Real> gamma, std::size_t n,
                                       std::complex<Real> lambda) {
  if (n == 0) return {1, 0};
  std::complex<Real> prev{1, 0}, cur = lambda - gamma;
  for (std::size_t k = 2; k <= n; ++k) {
    auto next = lambda * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Coefficients of a tridiagonal characteristic polynomial det(lambda I - T)
/// from its diagonal and the products sub_k * super_k of the off-diagonals:
/// p_k = (lambda - diag_k) p_{k-1} - offprod_{k-1} p_{k-2}.
template <typename Real>
CharPolyCoefficients<Real> tridiagonal_charpoly(const std::vector<std::complex<Real>>& diag,
                                                const std::vector<std::complex<Real>>& offprod) {
  using W = detail::ComplexWord<Real>;
  const std::size_t n = diag.size();
  if (n == 0 || offprod.size() + 1 != n) {
    throw DimensionMismatch("tridiagonal_charpoly: size mismatch");
  }
  const W one{{1, 0}, {0, 0}};
  std::vector<W> prev{one};
  std::vector<W> cur{detail::cw_neg(detail::cw_mul(one, diag[0])), one};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<W> next(k + 2);
    for (std::size_t d = 0; d < cur.size(); ++d) {
      next[d + 1] = detail::cw_add(next[d + 1], cur[d]);
      next[d] = detail::cw_add(next[d], detail::cw_neg(detail::cw_mul(cur[d], diag[k])));
    }
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d] = detail::cw_add(next[d], detail::cw_neg(detail::cw_mul(prev[d], offprod[k - 1])));
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  CharPolyCoefficients<Real> out;
  out.coeffs.reserve(cur.size());
  out.tail.reserve(cur.size());
  for (const auto& w : cur) {
    out.coeffs.emplace_back(w.re.hi, w.im.hi);
    out.tail.emplace_back(w.re.lo, w.im.lo);
  }
  return out;
}

template <typename Real>
CharPolyCoefficients<Real> charpoly_coefficients(std::complex<Real> gamma, std::size_t n) {
  if (n < 1) throw DomainError("charpoly_coefficients: n must be >= 1");
  if (n > kMaxCoefficientOrder) {
    throw OrderTooLarge("charpoly_coefficients: order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxCoefficientOrder));
  }
  std::vector<std::complex<Real>> diag(n, {0, 0});
  diag[0] = gamma;
  // sub = +1, super = -1 in A, so in lambda I - A the product is -1 * +1 = -1.
  std::vector<std::complex<Real>> offprod(n - 1, {-1, 0});
  return tridiagonal_charpoly(diag, offprod);
}

template <typename Real>
CharPolyCoefficients<Real> charpoly_coefficients(const GammaParameter<Real>& g, std::size_t n) {
  return charpoly_coefficients(g.value(), n);
}

/// Charpoly coefficients of a dense matrix that must be tridiagonal.
template <typename Real>
CharPolyCoefficients<Real> charpoly_of_tridiagonal(const MatrixXc<Real>& t) {
  const auto n = t.rows();
  if (n != t.cols() || n < 1) throw DimensionMismatch("charpoly_of_tridiagonal: not square");
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (std::abs(r - c) > 1 && t(r, c) != std::complex<Real>{})
        throw DomainError("charpoly_of_tridiagonal: matrix is not tridiagonal");
  std::vector<std::complex<Real>> diag(static_cast<std::size_t>(n));
  std::vector<std::complex<Real>> offprod(static_cast<std::size_t>(n - 1));
  for (Eigen::Index k = 0; k < n; ++k) diag[static_cast<std::size_t>(k)] = t(k, k);
  for (Eigen::Index k = 0; k + 1 < n; ++k)
    offprod[static_cast<std::size_t>(k)] = t(k + 1, k) * t(k, k + 1);
  return tridiagonal_charpoly(diag, offprod);
}

/// B = i J A J^{-1} with J = diag(i, i^2, ..., i^n), built densely.
template <typename Real>
MatrixXc<Real> similarity_matrix_b(const PerturbedMatrix<Real>& m) {
  const auto n = static_cast<Eigen::Index>(m.n);
  VectorXc<Real> jd(n);
  for (Eigen::Index k = 0; k < n; ++k) jd(k) = ipow<Real>(static_cast<long>(k) + 1);
  const MatrixXc<Real> a = dense_matrix(m);
  const std::complex<Real> i{0, 1};
  return i * (jd.asDiagonal() * a * jd.cwiseInverse().asDiagonal());
}

template <typename Real>
struct RootFinderConfig {
  std::size_t max_iter = 500;
  Real tol = Real(4) * std::numeric_limits<Real>::epsilon();
  Real residual_factor = Real(1e-9);
  std::size_t polish_steps = 3;
};

/// All roots of a monic polynomial by Aberth-Ehrlich iteration. Starting
/// points are equispaced on a circle of radius 1 + max|c_k|^{1/n}, rotated by
/// a fixed irrational angle, so results are deterministic.
template <typename Real>
std::vector<std::complex<Real>> find_roots(const CharPolyCoefficients<Real>& p,
                                           const RootFinderConfig<Real>& cfg = {}) {
  using C = std::complex<Real>;
  if (p.coeffs.size() < 2) throw DomainError("find_roots: degree must be >= 1");
  if (!p.tail.empty() && p.tail.size() != p.coeffs.size()) {
    throw DimensionMismatch("find_roots: tail length differs from coefficient length");
  }
  if (p.coeffs.back() != C{1, 0}) throw DomainError("find_roots: polynomial must be monic");
  for (const auto& c : p.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("find_roots: non-finite coefficient");

  const std::size_t n = p.degree();
  if (n == 1) return {-p.coeffs[0]};

  Real cmax = 0;
  for (std::size_t k = 0; k < n; ++k) cmax = std::max(cmax, std::abs(p.coeffs[k]));
  const Real radius = Real(1) + std::pow(cmax, Real(1) / static_cast<Real>(n));
  const Real offset = Real(0.5) * std::numbers::sqrt2_v<Real>;

  std::vector<C> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real phi =
        Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n) + offset;
    z[k] = std::polar(radius, phi);
  }
  std::vector<bool> done(n, false);

  auto eval = [&](C x, C& v, C& dv) {
    v = C{0, 0};
    dv = C{0, 0};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
      dv = dv * x + v;
      v = v * x + *it;
    }
  };

  const Real noise = Real(4) * static_cast<Real>(n + 1) * std::numeric_limits<Real>::epsilon();
  Real max_corr = 0;
  std::size_t it = 0;
  for (; it < cfg.max_iter; ++it) {
    max_corr = 0;
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      C v, dv;
      eval(z[k], v, dv);
      // Stop once |p(z)| is at the Horner rounding-error level.
      if (std::abs(v) <= noise * p.magnitude_scale(z[k])) {
        done[k] = true;
        continue;
      }
      const C ratio = v / dv;
      C repulsion{0, 0};
      for (std::size_t m = 0; m < n; ++m)
        if (m != k) repulsion += C{1, 0} / (z[k] - z[m]);
      const C corr = ratio / (C{1, 0} - ratio * repulsion);
      z[k] -= corr;
      const Real size = std::abs(corr);
      max_corr = std::max(max_corr, size);
      if (size <= cfg.tol * std::max(Real(1), std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  if (it == cfg.max_iter) {
    throw RootConvergenceFailure("find_roots: Aberth iteration did not converge", it,
                                 static_cast<double>(max_corr));
  }
  // Newton polish with an accurate residual: binary64 Horner noise near
  // +-2i is far larger than the root perturbation caused by rounding the
  // coefficients themselves.
  for (auto& r : z) {
    for (std::size_t k = 0; k < cfg.polish_steps; ++k) {
      C v, dv;
      eval(r, v, dv);
      v = detail::horner_accurate(p.coeffs, p.tail, r);
      if (v == C{0, 0} || dv == C{0, 0}) break;
      r -= v / dv;
    }
  }
  for (const auto& r : z) {
    if (std::abs(p(r)) > cfg.residual_factor * p.magnitude_scale(r)) {
      throw RootConvergenceFailure("find_roots: root residual above tolerance", it,
                                   static_cast<double>(max_corr));
    }
  }
  return z;
}

template <typename Real>
struct RootMatchReport {
  std::vector<std::tuple<std::complex<Real>, std::complex<Real>, Real>> pairs;
  Real max_distance = 0;
  std::size_t unmatched = 0;

  bool success(Real threshold = Real(1e-8)) const {
    return unmatched == 0 && max_distance <= threshold;
  }
};

/// Greedy perfect matching: repeatedly pair the globally closest unmatched
/// (first, second) values. Pairs are reported in the order of `second`.
template <typename Real>
RootMatchReport<Real> match_values(const std::vector<std::complex<Real>>& first,
                                   const std::vector<std::complex<Real>>& second) {
  if (first.size() != second.size()) {
    throw CardinalityMismatch("match: " + std::to_string(first.size()) + " vs " +
                              std::to_string(second.size()) + " values");
  }
  const std::size_t n = first.size();
  std::vector<std::tuple<Real, std::size_t, std::size_t>> cand;
  cand.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cand.emplace_back(std::abs(first[a] - second[b]), a, b);
  std::sort(cand.begin(), cand.end());

  std::vector<bool> used_a(n, false), used_b(n, false);
  std::vector<std::size_t> partner(n, n);
  std::size_t matched = 0;
  for (const auto& [dist, a, b] : cand) {
    if (used_a[a] || used_b[b]) continue;
    used_a[a] = used_b[b] = true;
    partner[b] = a;
    if (++matched == n) break;
  }

  RootMatchReport<Real> rep;
  rep.unmatched = n - matched;
  for (std::size_t b = 0; b < n; ++b) {
    if (partner[b] == n) continue;
    const Real d = std::abs(first[partner[b]] - second[b]);
    rep.pairs.emplace_back(first[partner[b]], second[b], d);
    rep.max_distance = std::max(rep.max_distance, d);
  }
  return rep;
}

template <typename Real>
RootMatchReport<Real> match_spectra(const std::vector<std::complex<Real>>& oracle_roots,
                                    const Spectrum<Real>& spec) {
  return match_values(oracle_roots, spec.eigenvalues());
}

/// Roots of the characteristic polynomial from the coefficient route.
template <typename Real>
std::vector<std::complex<Real>> oracle_eigenvalues(const GammaParameter<Real>& g, std::size_t n) {
  return find_roots(charpoly_coefficients(g, n));
}

}  // namespace ctoep

#endif  // CTOEP_ORACLE_HPP
