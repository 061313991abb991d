// The invariant suite: every module's properties evaluated over the polar
// parameter ladder gamma = r e^{2 pi i q}.

#ifndef CTOEP_VERIFY_HPP
#define CTOEP_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctoep/io.hpp"
#include "ctoep/solver.hpp"

namespace ctoep::verify {

enum class GridSize { standard, large };

struct VerifyConfig {
  GridSize grid = GridSize::standard;
  std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> turns{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::size_t min_n = 2;
  std::size_t max_n = 32;  // 128 for the large grid
  std::size_t oracle_max_n = 32;
  IterationConfig<double> iteration{};
  std::uint64_t seed = 0x5eed'c70e'9u;
  // Test-only fault injection: scales theta by (1 + 1e-6) inside the checks.
  bool perturb_formula = false;

  static VerifyConfig for_grid(GridSize size);
};

struct CheckResult {
  std::string module;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0;      // largest observed metric
  double threshold = 0;  // a case fails when its metric exceeds this
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool ok() const { return failed_count() == 0; }
};

VerifyReport run_verify(const VerifyConfig& cfg);

io::OutputRecord verify_record(const VerifyReport& report, const VerifyConfig& cfg);

}  // namespace ctoep::verify

#endif  // CTOEP_VERIFY_HPP
