#include <cmath>
#include <cstdio>
#include <string>

#include "ctoep/io.hpp"

namespace ctoep::io {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void OutputRecord::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw DimensionMismatch("row has " + std::to_string(row.size()) + " cells, expected " +
                            std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParseError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

namespace {

std::string csv_field(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + '"';
    }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_value(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      // JSON has no non-finite numbers.
      if (!std::isfinite(v)) return format_real(v);
      return v;
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_csv(std::ostream& os, const OutputRecord& rec) {
  for (std::size_t k = 0; k < rec.columns.size(); ++k) os << (k ? "," : "") << rec.columns[k];
  os << '\n';
  for (const auto& row : rec.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const OutputRecord& rec) {
  nlohmann::ordered_json doc;
  doc["meta"] = rec.meta;
  doc["meta"]["schema"] = kSchemaVersion;
  doc["meta"]["version"] = kToolVersion;
  doc["meta"]["kind"] = rec.kind;
  doc["meta"]["columns"] = rec.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : rec.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) obj[rec.columns[k]] = json_value(row[k]);
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  // nlohmann writes the shortest round-trip form of each double.
  os << doc.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::strict) << '\n';
}

void write(std::ostream& os, const OutputRecord& rec, Format fmt) {
  if (fmt == Format::csv) {
    write_csv(os, rec);
  } else {
    write_json(os, rec);
  }
}

nlohmann::ordered_json gamma_meta(const GammaParameter<double>& g) {
  nlohmann::ordered_json m;
  m["re"] = g.value().real();
  m["im"] = g.value().imag();
  m["modulus"] = g.modulus();
  m["delta"] = g.delta();
  m["m0"] = g.m0();
  m["m1"] = g.m1();
  m["m_ball"] = g.m_ball();
  m["n_threshold"] = g.n_threshold();
  return m;
}

}  // namespace ctoep::io
