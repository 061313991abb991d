// ctoep: eigenvalues of the corner-perturbed tridiagonal Toeplitz family.
//
//   ctoep solve     --gamma 0.5 --n 32 [--vectors [--normalize]]
//   ctoep table     1|2|3 [--max-n 1024] [--n 256 --n 512]
//   ctoep plot-data --gamma-polar 0.5:0.1 --n 64 [--theta]
//   ctoep verify    [--grid large]
//
// Exit codes: 0 success, 2 usage, 3 convergence failure, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctoep/commands.hpp"
#include "ctoep/io.hpp"
#include "ctoep/tables.hpp"

namespace {

using namespace ctoep;

struct Common {
  std::string format = "csv";
  std::string out;
  double tol = 1e-14;
  std::size_t max_iter = 200;
};

struct GammaFlags {
  std::string cartesian;
  std::string polar;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", c.out, "Write output to FILE instead of stdout");
  sub->add_option("--tol", c.tol, "Fixed-point step tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-iter", c.max_iter, "Iteration cap per eigenvalue")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}))
      ->capture_default_str();
}

void add_gamma(CLI::App* sub, GammaFlags& g) {
  auto* cart = sub->add_option("--gamma", g.cartesian,
                               "Perturbation, e.g. 0.5, i/3, 2/5-5j/6, or polar r@q");
  auto* pol = sub->add_option("--gamma-polar", g.polar, "Perturbation r:q = r exp(2 pi i q)");
  cart->excludes(pol);
  pol->excludes(cart);
}

GammaParameter<double> resolve_gamma(const GammaFlags& g) {
  if (!g.polar.empty()) return make_gamma(io::parse_polar(g.polar));
  if (!g.cartesian.empty()) return io::parse_gamma(g.cartesian);
  throw CLI::RequiredError("--gamma or --gamma-polar");
}

IterationConfig<double> iteration(const Common& c) {
  IterationConfig<double> it;
  it.tol = c.tol;
  it.max_iter = c.max_iter;
  return it;
}

int emit(const cli::CommandResult& res, const Common& c) {
  const auto fmt = io::parse_format(c.format);
  if (c.out.empty()) {
    io::write(std::cout, res.record, fmt);
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << c.out << " for writing\n";
      return cli::kExitUsage;
    }
    io::write(f, res.record, fmt);
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalues and eigenvectors of T_n(t - 1/t) + gamma E_11, 0 < |gamma| < 1"};
  app.require_subcommand(1);

  Common solve_c, table_c, plot_c, verify_c;
  GammaFlags solve_g, plot_g;
  std::size_t solve_n = 0, plot_n = 0;
  bool vectors = false, normalize = false, theta = false, perturb = false;
  int which = 0;
  std::size_t max_n = 4096;
  std::vector<std::size_t> table_orders;
  std::string grid = "standard";

  auto* solve = app.add_subcommand("solve", "Solve every eigenvalue by fixed-point iteration");
  add_gamma(solve, solve_g);
  solve->add_option("--n", solve_n, "Matrix order (>= 2)")->required();
  solve->add_flag("--vectors", vectors, "Emit eigenvector components");
  solve->add_flag("--normalize", normalize, "Scale eigenvectors to unit norm (with --vectors)");
  add_common(solve, solve_c);

  auto* table = app.add_subcommand("table", "Recompute a published error table");
  table->add_option("which", which, "Table id")->required()->check(CLI::Range(1, 3));
  table->add_option("--n", table_orders, "Orders to compute (default 256, 512, ..., 4096)");
  table->add_option("--max-n", max_n, "Drop orders above this cap")->capture_default_str();
  add_common(table, table_c);

  auto* plot = app.add_subcommand("plot-data", "Eigenvalue points or a theta sample grid");
  add_gamma(plot, plot_g);
  plot->add_option("--n", plot_n, "Matrix order (>= 2)");
  plot->add_flag("--theta", theta, "Sample theta on [0, 2 pi] x [-delta/2, delta/2]");
  add_common(plot, plot_c);

  auto* ver = app.add_subcommand("verify", "Run the invariant suite over the parameter grid");
  ver->add_option("--grid", grid, "standard (n <= 32) or large (n <= 128)")
      ->check(CLI::IsMember({"standard", "large"}))
      ->capture_default_str();
  ver->add_flag("--perturb-formula", perturb, "Inject a formula fault (suite sensitivity test)");
  add_common(ver, verify_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*solve) {
      cli::SolveOptions opt;
      opt.iteration = iteration(solve_c);
      opt.vectors = vectors;
      opt.normalize = normalize;
      return emit(cli::cmd_solve(resolve_gamma(solve_g), solve_n, opt), solve_c);
    }
    if (*table) {
      std::vector<std::size_t> orders;
      if (table_orders.empty()) {
        orders = tables::default_orders(max_n);
      } else {
        for (std::size_t n : table_orders)
          if (n <= max_n) orders.push_back(n);
      }
      return emit(cli::cmd_table(which, orders, iteration(table_c)), table_c);
    }
    if (*plot) {
      cli::PlotOptions opt;
      opt.iteration = iteration(plot_c);
      opt.theta = theta;
      if (!theta && plot_n == 0) throw CLI::RequiredError("--n");
      return emit(cli::cmd_plot_data(resolve_gamma(plot_g), plot_n, opt), plot_c);
    }
    auto cfg = verify::VerifyConfig::for_grid(grid == "large" ? verify::GridSize::large
                                                              : verify::GridSize::standard);
    cfg.iteration = iteration(verify_c);
    cfg.perturb_formula = perturb;
    const auto res = cli::cmd_verify(cfg);
    const int rc = emit(res, verify_c);
    std::cerr << "verify: " << res.record.meta["passed"] << " passed, "
              << res.record.meta["failed"] << " failed\n";
    return rc;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const SolveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
}
