#include "ctoep/commands.hpp"

#include <cmath>
#include <numbers>

#include "ctoep/eigvec.hpp"
#include "ctoep/symbol.hpp"
#include "ctoep/tables.hpp"

namespace ctoep::cli {

namespace {

void iteration_meta(io::OutputRecord& rec, const IterationConfig<double>& it) {
  rec.meta["tol"] = it.tol;
  rec.meta["max_iter"] = it.max_iter;
}

void require_order(std::size_t n) {
  if (n < 2) throw IndexOutOfRange("order n must be >= 2");
}

}  // namespace

CommandResult cmd_solve(const GammaParameter<double>& g, std::size_t n, const SolveOptions& opt) {
  require_order(n);
  CommandResult res;
  auto& rec = res.record;
  rec.meta["gamma"] = io::gamma_meta(g);
  rec.meta["n"] = n;
  rec.meta["certified"] = g.certified(n);
  iteration_meta(rec, opt.iteration);

  if (opt.vectors) {
    rec.kind = "eigenvectors";
    rec.meta["normalized"] = opt.normalize;
    rec.columns = {"j", "k", "re_v", "im_v"};
  } else {
    rec.kind = "spectrum";
    rec.columns = {"j",          "re_lambda",   "im_lambda",      "re_s",  "im_s",
                   "iterations", "fp_residual", "eigen_residual", "status"};
  }

  for (std::size_t j = 1; j <= n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    EigenSolution<double> sol;
    try {
      sol = iterate_fixed_point(g, n, j, opt.iteration);
    } catch (const SolveError& e) {
      res.exit_code = kExitConvergence;
      if (!opt.vectors) {
        const auto last = e.last_iterate();
        rec.add_row({jj, std::monostate{}, std::monostate{}, last.real(), last.imag(),
                     std::monostate{}, e.residual(), std::monostate{}, std::string("failed")});
      }
      continue;
    }
    const auto ev = eigenvector_components(g, n, sol);
    if (opt.vectors) {
      const double scale = opt.normalize ? 1.0 / std::sqrt(ev.norm_sq_direct) : 1.0;
      for (Eigen::Index k = 0; k < ev.components.size(); ++k) {
        const auto v = ev.components(k) * scale;
        rec.add_row({jj, static_cast<std::int64_t>(k + 1), v.real(), v.imag()});
      }
    } else {
      rec.add_row({jj, sol.lambda.real(), sol.lambda.imag(), sol.s.real(), sol.s.imag(),
                   static_cast<std::int64_t>(sol.iterations), sol.fp_residual, ev.residual,
                   std::string(g.certified(n) ? "ok" : "ok_uncertified")});
    }
  }
  return res;
}

CommandResult cmd_table(int which, const std::vector<std::size_t>& orders,
                        const IterationConfig<double>& iteration) {
  if (which < 1 || which > 3) throw DomainError("table id must be 1, 2 or 3");
  for (std::size_t n : orders) require_order(n);
  CommandResult res;
  switch (which) {
    case 1:
      res.record = tables::table1_record(tables::compute_table1(orders, iteration));
      break;
    case 2:
      res.record = tables::table2_record(tables::compute_table2(orders, iteration));
      break;
    default:
      res.record = tables::table3_record(tables::compute_table3(orders, iteration));
      break;
  }
  res.record.meta["table"] = which;
  res.record.meta["orders"] = orders;
  iteration_meta(res.record, iteration);
  return res;
}

CommandResult cmd_plot_data(const GammaParameter<double>& g, std::size_t n, const PlotOptions& opt) {
  CommandResult res;
  auto& rec = res.record;
  rec.meta["gamma"] = io::gamma_meta(g);
  if (opt.theta) {
    if (opt.theta_nx < 2 || opt.theta_ny < 2) throw DomainError("theta grid needs >= 2 samples per axis");
    rec.kind = "theta_map";
    rec.meta["rectangle"] = {0.0, 2 * std::numbers::pi, -g.delta() / 2, g.delta() / 2};
    rec.columns = {"re_z", "im_z", "re_theta", "im_theta"};
    const double h = g.delta() / 2;
    for (std::size_t b = 0; b < opt.theta_ny; ++b) {
      const double y = -h + 2 * h * static_cast<double>(b) / static_cast<double>(opt.theta_ny - 1);
      for (std::size_t a = 0; a < opt.theta_nx; ++a) {
        const double x =
            2 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(opt.theta_nx - 1);
        const auto t = theta(g, std::complex<double>{x, y});
        rec.add_row({x, y, t.real(), t.imag()});
      }
    }
    return res;
  }
  require_order(n);
  rec.kind = "eigenvalue_points";
  rec.meta["n"] = n;
  iteration_meta(rec, opt.iteration);
  rec.columns = {"re_lambda", "im_lambda"};
  for (std::size_t j = 1; j <= n; ++j) {
    try {
      const auto sol = iterate_fixed_point(g, n, j, opt.iteration);
      rec.add_row({sol.lambda.real(), sol.lambda.imag()});
    } catch (const SolveError&) {
      res.exit_code = kExitConvergence;
    }
  }
  return res;
}

CommandResult cmd_verify(const verify::VerifyConfig& cfg) {
  const auto report = verify::run_verify(cfg);
  CommandResult res;
  res.record = verify::verify_record(report, cfg);
  if (!report.ok()) res.exit_code = kExitVerification;
  return res;
}

}  // namespace ctoep::cli
