// Published reference values for the three error tables and the routines
// that recompute them from fixed-point spectra.

#ifndef CTOEP_TABLES_HPP
#define CTOEP_TABLES_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctoep/core.hpp"
#include "ctoep/io.hpp"
#include "ctoep/solver.hpp"

namespace ctoep::tables {

struct GammaCase {
  const char* label;
  std::complex<double> gamma;
};

/// E and n^3 E for the order-2 expansion.
struct Table1Ref {
  std::size_t gamma_index;
  std::size_t n;
  double e;
  double n3e;
};

/// Extreme-formula errors at j = 1 (near +2i) and j = n (near -2i), with the
/// normalized values. gamma = i/3 throughout.
struct Table2Ref {
  std::size_t n;
  double e_low;
  double norm_low;
  double e_high;
  double norm_high;
};

/// E of the order-2 expansion and G of the small-|gamma| expansion.
struct Table3Ref {
  std::size_t gamma_index;
  std::size_t n;
  double e;
  double g;
};

std::span<const GammaCase> table1_gammas();
std::span<const Table1Ref> table1_reference();
GammaCase table2_gamma();
std::span<const Table2Ref> table2_reference();
std::span<const GammaCase> table3_gammas();
std::span<const Table3Ref> table3_reference();

/// The published n values, 256 through 4096.
std::vector<std::size_t> default_orders(std::size_t max_n = 4096);

struct Table1Cell {
  std::string gamma_label;
  std::complex<double> gamma;
  std::size_t n;
  double e;
  double n3e;
  std::optional<Table1Ref> ref;
};

/// One row per (end, n): end 0 is j = 1 against lambda_ext0, end 1 is j = n
/// against lambda_ext1.
struct Table2Cell {
  std::size_t n;
  int end;
  std::size_t j;
  double e;
  double normalized;
  std::optional<double> ref_e;
  std::optional<double> ref_normalized;
};

struct Table3Cell {
  std::string gamma_label;
  std::complex<double> gamma;
  std::size_t n;
  double e;
  double g;
  double lambda_scale;  // max_j |lambda_j|
  std::optional<Table3Ref> ref;
  bool e_below_precision;
  bool g_below_precision;
};

/// Target values below this fraction of max |lambda| are not resolvable in
/// binary64 and are annotated instead of compared.
inline constexpr double kPrecisionFloor = 1e-13;

std::vector<Table1Cell> compute_table1(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg = {});
std::vector<Table2Cell> compute_table2(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg = {});
std::vector<Table3Cell> compute_table3(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg = {});

/// |computed - reference| / |reference|.
double relative_deviation(double computed, double reference);

io::OutputRecord table1_record(const std::vector<Table1Cell>& cells);
io::OutputRecord table2_record(const std::vector<Table2Cell>& cells);
io::OutputRecord table3_record(const std::vector<Table3Cell>& cells);

}  // namespace ctoep::tables

#endif  // CTOEP_TABLES_HPP
