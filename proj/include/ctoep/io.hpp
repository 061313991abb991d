// Parsing of complex perturbations and the CSV/JSON output record shared by
// every CLI command.

#ifndef CTOEP_IO_HPP
#define CTOEP_IO_HPP

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ctoep/core.hpp"

namespace ctoep::io {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Cartesian complex literal. Accepted terms are summed, each an optional
/// sign, a real number or fraction, and an optional i/j suffix; "i/3",
/// "2/5-5j/6", "0.5+0.25j" and "-j" are all valid.
std::complex<double> parse_complex(std::string_view text);

/// Polar grid form "r:q" or "r@q": r e^{2 pi i q}, q a fraction of a turn.
std::complex<double> parse_polar(std::string_view text);

/// Either form; polar when the text contains ':' or '@'.
GammaParameter<double> parse_gamma(std::string_view text);

/// Shortest text with 17 significant digits ("%.17g"); "nan", "inf", "-inf"
/// for non-finite values.
std::string format_real(double x);

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

inline constexpr const char* kSchemaVersion = "ctoep-output/1";
inline constexpr const char* kToolVersion = "1.0.0";

/// One command's output: fixed columns, rows in deterministic order, and
/// metadata. CSV carries only the header and rows; JSON carries both as
/// {"meta": {...}, "rows": [{column: value, ...}, ...]}.
struct OutputRecord {
  std::string kind;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(std::string_view text);

void write_csv(std::ostream& os, const OutputRecord& rec);
void write_json(std::ostream& os, const OutputRecord& rec);
void write(std::ostream& os, const OutputRecord& rec, Format fmt);

/// Metadata object for gamma: real and imaginary parts plus derived constants.
nlohmann::ordered_json gamma_meta(const GammaParameter<double>& g);

}  // namespace ctoep::io

#endif  // CTOEP_IO_HPP
