#include "ctoep/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <deque>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ctoep/asymptotics.hpp"
#include "ctoep/charpoly.hpp"
#include "ctoep/eigvec.hpp"
#include "ctoep/oracle.hpp"
#include "ctoep/symbol.hpp"

namespace ctoep::verify {

namespace {

using C = std::complex<double>;
constexpr C kI{0, 1};
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

class Suite {
 public:
  CheckResult& get(const std::string& module, const std::string& name, double threshold) {
    for (auto& c : checks_)
      if (c.module == module && c.name == name) return c;
    CheckResult c;
    c.module = module;
    c.name = name;
    c.threshold = threshold;
    checks_.push_back(c);
    return checks_.back();
  }

  // A NaN metric counts as a failure.
  static void observe(CheckResult& c, double metric, const std::string& where) {
    ++c.cases;
    const double m = std::isnan(metric) ? kInf : metric;
    c.worst = std::max(c.worst, m);
    if (!(m <= c.threshold)) {
      ++c.failures;
      if (c.first_failure.empty()) c.first_failure = where + " metric=" + io::format_real(metric);
    }
  }

  std::vector<CheckResult> results() const { return {checks_.begin(), checks_.end()}; }

 private:
  std::deque<CheckResult> checks_;
};

std::string where(double r, double q, std::size_t n = 0, std::size_t j = 0) {
  std::ostringstream os;
  os << "gamma=" << r << ":" << q;
  if (n) os << " n=" << n;
  if (j) os << " j=" << j;
  return os.str();
}

double rel(C a, C b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Scale of the recurrence evaluation: the same recurrence on magnitudes.
double recurrence_scale(C gamma, std::size_t n, C lambda) {
  const double l = std::abs(lambda);
  double prev = 1, cur = l + std::abs(gamma);
  for (std::size_t k = 2; k <= n; ++k) {
    const double next = l * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct Context {
  const VerifyConfig& cfg;
  Suite& suite;
  std::mt19937_64& rng;

  C theta_t(const GammaParameter<double>& g, C z) const {
    const C t = theta(g, z);
    return cfg.perturb_formula ? t * (1.0 + 1e-6) : t;
  }

  bool theta_continued_t(const GammaParameter<double>& g, C z, C& out) const {
    if (!theta_continued(g.value(), z, out)) return false;
    if (cfg.perturb_formula) out *= 1.0 + 1e-6;
    return true;
  }

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

  C strip_point(const GammaParameter<double>& g) {
    const double h = g.delta() / 2;
    return {uniform(0, 2 * kPi), uniform(-h, h)};
  }
};

void core_ladder(Context& cx) {
  auto& mono = cx.suite.get("core", "monotone_constants", 0);
  double prev_delta = kInf, prev_m = 0, prev_n = 0;
  std::size_t violations = 0;
  for (int k = 1; k <= 99; ++k) {
    const auto g = make_gamma(k / 100.0, 0.0);
    if (!(g.delta() < prev_delta) || !(g.m_ball() > prev_m) || !(g.n_threshold() > prev_n)) {
      ++violations;
    }
    prev_delta = g.delta();
    prev_m = g.m_ball();
    prev_n = g.n_threshold();
  }
  Suite::observe(mono, static_cast<double>(violations), "ladder |gamma|=0.01..0.99");

  // Even orders at gamma = 0 have constant term 1.
  auto& c0 = cx.suite.get("oracle", "constant_term_gamma0", 0);
  for (std::size_t n = 2; n <= 32; n += 2) {
    const auto p = charpoly_coefficients(C{0, 0}, n);
    Suite::observe(c0, std::abs(p.coeffs[0] - C{1, 0}), "gamma=0 n=" + std::to_string(n));
  }
}

void per_gamma(Context& cx, const GammaParameter<double>& g, double r, double q) {
  auto& s = cx.suite;
  const std::string at = where(r, q);

  const double ulp = std::nextafter(g.m_ball(), kInf) - g.m_ball();
  Suite::observe(s.get("core", "m_ball_identity_ulps", 4),
                 std::abs(g.m_ball() - 2 * g.m0() * g.m1()) / ulp, at);

  auto& period = s.get("symbol", "periodicity", 1e-12);
  auto& logc = s.get("symbol", "log_consistency", 1e-12);
  auto& quot = s.get("symbol", "log_quotient_form", 1e-12);
  auto& dform = s.get("symbol", "derivative_forms", 1e-13);
  auto& fd = s.get("symbol", "derivative_fd_error_over_h2_m1", 10);
  for (int k = 0; k < 1000; ++k) {
    const C z = cx.strip_point(g);
    const C t = cx.theta_t(g, z);
    Suite::observe(period, std::abs(cx.theta_t(g, z + 2 * kPi) - t), at);
    const C qv = q_gamma(g, z);
    Suite::observe(logc, std::abs(std::exp(2.0 * kI * t) - qv) / std::max(1.0, std::abs(qv)), at);
    Suite::observe(quot, std::abs(t - theta_log_quotient(g, z)), at);
    const C tp = theta_prime(g, z);
    Suite::observe(dform, rel(tp, theta_prime_factored(g, z)), at);
    if (k % 10 == 0) {
      const double h = 1e-5;
      const C diff = (cx.theta_t(g, z + h) - cx.theta_t(g, z - h)) / (2 * h);
      // O(h^2) truncation, scaled by the derivative bound.
      Suite::observe(fd, std::abs(tp - diff) / (h * h * (1 + g.m1())), at);
    }
  }

  Suite::observe(s.get("symbol", "zero_endpoints", 1e-15),
                 std::max(std::abs(cx.theta_t(g, C{0, 0})), std::abs(cx.theta_t(g, C{kPi, 0}))), at);

  double sup_t = 0, sup_tp = 0;
  const double h = g.delta() / 2;
  for (int a = 0; a < 200; ++a) {
    for (int b = 0; b < 50; ++b) {
      const C z{2 * kPi * a / 199.0, -h + 2 * h * b / 49.0};
      sup_t = std::max(sup_t, std::abs(cx.theta_t(g, z)));
      sup_tp = std::max(sup_tp, std::abs(theta_prime(g, z)));
    }
  }
  Suite::observe(s.get("symbol", "theta_bound_ratio", 1), sup_t / theta_bound(g), at);
  Suite::observe(s.get("symbol", "theta_prime_bound_ratio", 1), sup_tp / theta_prime_bound(g), at);

  auto& decomp = s.get("symbol", "real_axis_decomposition", 1e-12);
  auto& realbound = s.get("symbol", "real_axis_re_theta_over_half_pi", 1);
  for (int k = 0; k < 64; ++k) {
    const double x = kPi * k / 63.0;
    const C t = cx.theta_t(g, C{x, 0});
    Suite::observe(decomp, std::abs(theta_real_axis(g, x) - t), at);
    Suite::observe(realbound, std::abs(t.real()) / (kPi / 2), at);
  }

  // theta is odd, so the remainder after the linear term is O(z^3); the
  // check only asks that remainder / z^2 does not grow as z shrinks.
  const C slope = kI * g.value() / (1.0 + kI * g.value());
  auto rem_theta = [&](double z) { return std::abs(theta(g, C{z, 0}) - slope * z) / (z * z); };
  Suite::observe(s.get("asymptotics", "taylor_theta_anchor", 1.1),
                 rem_theta(1e-3) / std::max(rem_theta(1e-2), 1e-300), at);
}

void taylor_psi(Context& cx) {
  auto rem = [](double z) { return std::abs(psi(C{z, 0}) - 2.0 * kI + kI * z * z) / (z * z * z * z); };
  Suite::observe(cx.suite.get("asymptotics", "taylor_psi_anchor", 1.1), rem(1e-3) / rem(1e-2),
                 "z=1e-2,1e-3");
}

void per_order(Context& cx, const GammaParameter<double>& g, double r, double q, std::size_t n) {
  auto& s = cx.suite;
  const std::string at = where(r, q, n);
  const C gm = g.value();
  const double m = static_cast<double>(n) + 1;
  const double tol = cx.cfg.iteration.tol;

  // charpoly
  if (n <= 32) {
    auto& recc = s.get("charpoly", "recurrence_vs_chebyshev", 1e-11);
    for (int k = 0; k < 100; ++k) {
      const C lam{cx.uniform(-3, 3), cx.uniform(-3, 3)};
      const C a = charpoly_recurrence(gm, n, lam);
      const C b = charpoly_chebyshev(gm, n, lam);
      Suite::observe(recc, std::abs(a - b) / recurrence_scale(gm, n, lam), at);
    }
  }
  if (n <= 64) {
    auto& tc = s.get("charpoly", "trig_vs_chebyshev", 1e-10);
    auto& tt = s.get("charpoly", "trig1_vs_trig2", 1e-12);
    for (int k = 0; k < 20; ++k) {
      const C z = cx.strip_point(g);
      const C t1 = charpoly_trig(gm, n, z);
      Suite::observe(tc, std::abs(t1 - charpoly_chebyshev(gm, n, psi(z))) / (1 + std::abs(t1)), at);
      Suite::observe(tt, std::abs(t1 - charpoly_trig2(gm, n, z)) / (1 + std::abs(t1)), at);
    }
  }
  if (n <= 16) {
    const PerturbedMatrix<double> pm{gm, n};
    VectorXc<double> v(static_cast<Eigen::Index>(n));
    for (auto& x : v) x = C{cx.uniform(-1, 1), cx.uniform(-1, 1)};
    Suite::observe(s.get("charpoly", "matvec_vs_dense", 0),
                   (matvec(pm, v) - dense_matrix(pm) * v).cwiseAbs().maxCoeff(), at);
  }
  {
    const auto [up, down] = not_eigenvalue_check(gm, n);
    const C dp = charpoly_chebyshev(gm, n, C{0, 2});
    const C dm = charpoly_chebyshev(gm, n, C{0, -2});
    Suite::observe(s.get("charpoly", "not_eigenvalue_closed_form", 1e-12),
                   std::max(std::abs(std::abs(dp) - up) / up, std::abs(std::abs(dm) - down) / down),
                   at);
    Suite::observe(s.get("charpoly", "not_eigenvalue_inverse_bound", 1.0 - 1e-12),
                   1.0 / std::min(up, down), at);
  }

  // solver
  Spectrum<double> spec{g, n, {}, Provenance::fixed_point};
  std::size_t failed = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    try {
      spec.entries.push_back(iterate_fixed_point(g, n, j, cx.cfg.iteration));
    } catch (const Error&) {
      ++failed;
    }
  }
  Suite::observe(s.get("solver", "converged_failures", 0), static_cast<double>(failed), at);
  if (failed) return;

  auto& maineq = s.get("solver", "main_equation_residual", 10 * tol);
  auto& czero = s.get("solver", "charpoly_zero_over_n", 1e-9);
  auto& expf = s.get("charpoly", "exponential_form_at_fixed_point", 1e-10);
  for (const auto& e : spec.entries) {
    C t;
    const bool ok = cx.theta_continued_t(g, e.s, t);
    const double res = ok ? std::abs(m * e.s - static_cast<double>(e.j) * kPi - t) : kInf;
    Suite::observe(maineq, res, where(r, q, n, e.j));
    Suite::observe(czero, std::abs(charpoly_trig(gm, n, e.s)) / static_cast<double>(n),
                   where(r, q, n, e.j));
    const auto [qa, qb] = detail::q_factors(gm, e.s);
    const C qv = qa / qb;
    Suite::observe(expf,
                   std::abs(detail::expi(2.0 * m * e.s) - qv) / std::max(1.0, std::abs(qv)),
                   where(r, q, n, e.j));
  }
  {
    // Between consecutive fixed points neither form vanishes.
    auto& mid = s.get("charpoly", "exponential_form_off_spectrum", 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const C z = 0.5 * (spec.entries[k].s + spec.entries[k + 1].s);
      const auto [qa, qb] = detail::q_factors(gm, z);
      const double er = std::abs(detail::expi(2.0 * m * z) - qa / qb);
      const double dr = std::abs(charpoly_trig(gm, n, z));
      Suite::observe(mid, 1e-8 / std::min(er, dr), at);
    }
  }

  Suite::observe(s.get("solver", "ordering_violations", 0), strictly_ordered(spec) ? 0.0 : 1.0, at);

  const auto lams = spec.eigenvalues();
  double min_sep = kInf;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) min_sep = std::min(min_sep, std::abs(lams[a] - lams[b]));
  Suite::observe(s.get("solver", "inverse_separation_over_1e10", 1), 1e-10 / min_sep, at);

  {
    const auto [up, down] = not_eigenvalue_check(gm, n);
    double pp = 1, pm = 1, closest = kInf;
    for (const auto& l : lams) {
      pp *= std::abs(C{0, 2} - l);
      pm *= std::abs(C{0, -2} - l);
      closest = std::min({closest, std::abs(C{0, 2} - l), std::abs(C{0, -2} - l)});
    }
    const double metric =
        closest > 0 ? std::max(std::abs(pp - up) / up, std::abs(pm - down) / down) : kInf;
    Suite::observe(s.get("solver", "pm2i_exclusion_product", 1e-8), metric, at);
  }

  if (g.is_real()) {
    std::vector<C> conj;
    for (const auto& l : lams) conj.push_back(std::conj(l));
    Suite::observe(s.get("charpoly", "real_gamma_conjugation", 1e-10),
                   match_values(lams, conj).max_distance, at);
  }

  if (g.certified(n)) {
    auto& conf = s.get("solver", "imag_confinement_ratio", 1);
    auto& ball = s.get("solver", "ball_membership_ratio", 1);
    auto& contr = s.get("solver", "contraction_factor", 0.5);
    auto& uniq = s.get("solver", "ball_restart_spread", 10 * tol);
    for (const auto& e : spec.entries) {
      const std::string wj = where(r, q, n, e.j);
      Suite::observe(conf, std::abs(e.s.imag()) / (g.delta() / 2), wj);
      const auto b = localization_ball(g, n, e.j);
      Suite::observe(ball, std::abs(e.s - b.center) / b.radius, wj);
      Suite::observe(contr, contraction_certificate(g, n, e.j, 4, 32).factor, wj);
      if (e.j % 8 == 1) {
        double spread = 0;
        for (int k = 0; k < 8; ++k) {
          const C start = b.center + std::polar(b.radius * std::sqrt(cx.uniform(0, 1)),
                                                cx.uniform(0, 2 * kPi));
          try {
            spread = std::max(spread, std::abs(iterate_from(g, n, e.j, start, cx.cfg.iteration).s - e.s));
          } catch (const Error&) {
            spread = kInf;
          }
        }
        Suite::observe(uniq, spread, wj);
      }
    }
  }

  // asymptotics
  if (n >= 8) {
    const std::size_t j = (n + 1) / 2;
    const C fp = spec.entries[j - 1].lambda;
    const double mid_err = std::abs(lambda_asymptotic(g, n, j) - fp);
    const double ext_err = std::abs(lambda_extreme_low(g, n, j) - fp);
    Suite::observe(s.get("asymptotics", "midrange_expansion_vs_extreme_ratio", 1),
                   mid_err / ext_err, at);
  }
  if (n <= 16) {
    const auto broots = find_roots(charpoly_of_tridiagonal(similarity_matrix_b(PerturbedMatrix<double>{gm, n})));
    Suite::observe(s.get("asymptotics", "b_similarity_spectrum", 1e-10),
                   match_values(broots, b_similarity_spectrum(spec)).max_distance, at);
  }

  // eigvec
  {
    auto& resid = s.get("eigvec", "eigen_residual", 1e-10);
    auto& norm = s.get("eigvec", "norm_closed_vs_direct", 1e-9);
    auto& forms = s.get("eigvec", "trig_vs_chebyshev_form", 1e-10);
    std::vector<VectorXc<double>> vs;
    vs.reserve(n);
    for (const auto& e : spec.entries) {
      const std::string wj = where(r, q, n, e.j);
      const auto ev = eigenvector_components(g, n, e);
      Suite::observe(resid, ev.residual, wj);
      Suite::observe(norm, std::abs(ev.norm_sq_closed - ev.norm_sq_direct) / ev.norm_sq_direct, wj);
      if (n <= 64) {
        const auto cheb = eigenvector_chebyshev(gm, n, e.lambda);
        const C factor = -detail::sin_c(e.s);
        Suite::observe(forms,
                       (ev.components - factor * cheb).cwiseAbs().maxCoeff() /
                           ev.components.cwiseAbs().maxCoeff(),
                       wj);
      }
      vs.push_back(ev.components / std::sqrt(ev.norm_sq_direct));
    }
    auto& indep = s.get("eigvec", "max_cosine_between_distinct", 1 - 1e-8);
    double worst = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t last = n <= 32 ? n : std::min(n, a + 2);
      for (std::size_t b = a + 1; b < last; ++b) worst = std::max(worst, std::abs(vs[a].dot(vs[b])));
    }
    Suite::observe(indep, worst, at);
  }

  // oracle
  if (n <= cx.cfg.oracle_max_n) {
    auto& eq = s.get("oracle", "fixed_point_match_distance", 1e-8);
    try {
      const auto coeffs = charpoly_coefficients(g, n);
      const auto roots = find_roots(coeffs);
      Suite::observe(eq, match_spectra(roots, spec).max_distance, at);
      C sum{0, 0}, prod{1, 0};
      for (const auto& x : roots) {
        sum += x;
        prod *= x;
      }
      Suite::observe(s.get("oracle", "vieta_sum_vs_trace", 1e-9), std::abs(sum - gm), at);
      const C expect = (n % 2 ? -1.0 : 1.0) * coeffs.coeffs[0];
      Suite::observe(s.get("oracle", "vieta_product_relative", 1e-9),
                     std::abs(prod - expect) / std::abs(expect), at);
    } catch (const Error& ex) {
      Suite::observe(eq, kInf, at + " " + ex.what());
    }
  }
}

void decay_orders(Context& cx) {
  auto& s = cx.suite;
  const std::vector<C> gammas{{0.5, 0}, {0, 1.0 / 3}, {0.4, -5.0 / 6}};
  auto& stab = s.get("asymptotics", "n3E_top_two_variation", 0.1);
  auto& ext = s.get("asymptotics", "extreme_normalized_max_over_min", 4);
  for (const auto& gv : gammas) {
    const auto g = make_gamma(gv);
    std::vector<double> scaled;
    std::vector<std::array<double, 6>> extreme;
    for (std::size_t n : {64u, 128u, 256u, 512u}) {
      const auto spec = solve_spectrum(g, n, cx.cfg.iteration);
      const double nn = static_cast<double>(n);
      scaled.push_back(nn * nn * nn * asymptotic_error(spec));
      if (n >= 128) {
        std::array<double, 6> row{};
        for (std::size_t j = 1; j <= 3; ++j) {
          row[j - 1] = extreme_low_normalized(spec, j);
          row[j + 2] = extreme_high_normalized(spec, n + 1 - j);
        }
        extreme.push_back(row);
      }
    }
    std::ostringstream at;
    at << "gamma=" << gv.real() << (gv.imag() < 0 ? "" : "+") << gv.imag() << "i";
    Suite::observe(stab, std::abs(scaled[3] - scaled[2]) / scaled[3], at.str());
    for (std::size_t c = 0; c < 6; ++c) {
      double lo = kInf, hi = 0;
      for (const auto& row : extreme) {
        lo = std::min(lo, row[c]);
        hi = std::max(hi, row[c]);
      }
      Suite::observe(ext, hi / lo, at.str() + (c < 3 ? " low j=" : " high j=n+1-") +
                                       std::to_string(c % 3 + 1));
    }
  }
}

}  // namespace

VerifyConfig VerifyConfig::for_grid(GridSize size) {
  VerifyConfig cfg;
  cfg.grid = size;
  cfg.max_n = size == GridSize::large ? 128 : 32;
  return cfg;
}

std::size_t VerifyReport::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); }));
}

std::size_t VerifyReport::failed_count() const { return checks.size() - passed_count(); }

VerifyReport run_verify(const VerifyConfig& cfg) {
  if (cfg.min_n < 2 || cfg.max_n < cfg.min_n) throw DomainError("verify: invalid order range");
  Suite suite;
  std::mt19937_64 rng(cfg.seed);
  Context cx{cfg, suite, rng};

  core_ladder(cx);
  taylor_psi(cx);
  for (double r : cfg.radii) {
    for (double q : cfg.turns) {
      const auto g = make_gamma_polar(r, q);
      per_gamma(cx, g, r, q);
      for (std::size_t n = cfg.min_n; n <= cfg.max_n; ++n) per_order(cx, g, r, q, n);
    }
  }
  decay_orders(cx);
  return {suite.results()};
}

io::OutputRecord verify_record(const VerifyReport& report, const VerifyConfig& cfg) {
  io::OutputRecord rec;
  rec.kind = "verify";
  rec.meta["grid"] = cfg.grid == GridSize::large ? "large" : "standard";
  rec.meta["radii"] = cfg.radii;
  rec.meta["turns"] = cfg.turns;
  rec.meta["n_min"] = cfg.min_n;
  rec.meta["n_max"] = cfg.max_n;
  rec.meta["oracle_n_max"] = cfg.oracle_max_n;
  rec.meta["tol"] = cfg.iteration.tol;
  rec.meta["max_iter"] = cfg.iteration.max_iter;
  rec.meta["perturb_formula"] = cfg.perturb_formula;
  rec.meta["passed"] = report.passed_count();
  rec.meta["failed"] = report.failed_count();
  rec.columns = {"module", "check", "cases", "failures", "worst", "threshold", "status",
                 "first_failure"};
  for (const auto& c : report.checks) {
    rec.add_row({c.module, c.name, static_cast<std::int64_t>(c.cases),
                 static_cast<std::int64_t>(c.failures), c.worst, c.threshold,
                 std::string(c.passed() ? "pass" : "fail"), c.first_failure});
  }
  return rec;
}

}  // namespace ctoep::verify
