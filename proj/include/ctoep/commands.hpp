// The CLI subcommands as library functions, so tests can drive them without
// spawning processes.

#ifndef CTOEP_COMMANDS_HPP
#define CTOEP_COMMANDS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ctoep/io.hpp"
#include "ctoep/solver.hpp"
#include "ctoep/verify.hpp"

namespace ctoep::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitConvergence = 3,
  kExitVerification = 4,
};

struct CommandResult {
  int exit_code = kExitOk;
  io::OutputRecord record;
};

struct SolveOptions {
  IterationConfig<double> iteration{};
  bool vectors = false;    // emit eigenvector components instead of eigenvalues
  bool normalize = false;  // scale each vector to unit 2-norm
};

/// One row per j; a j whose iteration fails gets status "failed" and the
/// command exits with kExitConvergence.
CommandResult cmd_solve(const GammaParameter<double>& g, std::size_t n, const SolveOptions& opt);

/// which in {1, 2, 3}; orders default to the published 256..4096 capped at max_n.
CommandResult cmd_table(int which, const std::vector<std::size_t>& orders,
                        const IterationConfig<double>& iteration);

struct PlotOptions {
  IterationConfig<double> iteration{};
  bool theta = false;  // sample theta on [0, 2 pi] x [-delta/2, delta/2] instead
  std::size_t theta_nx = 129;
  std::size_t theta_ny = 17;
};

CommandResult cmd_plot_data(const GammaParameter<double>& g, std::size_t n, const PlotOptions& opt);

CommandResult cmd_verify(const verify::VerifyConfig& cfg);

}  // namespace ctoep::cli

#endif  // CTOEP_COMMANDS_HPP
