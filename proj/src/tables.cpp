#include <algorithm>
#include <cmath>

#include "ctoep/asymptotics.hpp"
#include "ctoep/tables.hpp"

namespace ctoep::tables {

namespace {

io::Cell opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

io::Cell deviation(double computed, const std::optional<double>& ref) {
  if (!ref) return std::monostate{};
  return relative_deviation(computed, *ref);
}

io::Cell gamma_text(std::complex<double> g) {
  return io::format_real(g.real()) + (g.imag() < 0 ? "" : "+") + io::format_real(g.imag()) + "j";
}

}  // namespace

std::vector<std::size_t> default_orders(std::size_t max_n) {
  std::vector<std::size_t> out;
  for (std::size_t n = 256; n <= 4096 && n <= max_n; n *= 2) out.push_back(n);
  return out;
}

double relative_deviation(double computed, double reference) {
  return std::abs(computed - reference) / std::abs(reference);
}

std::vector<Table1Cell> compute_table1(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg) {
  std::vector<Table1Cell> out;
  const auto gammas = table1_gammas();
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    const auto g = make_gamma(gammas[gi].gamma);
    for (std::size_t n : orders) {
      const auto spec = solve_spectrum(g, n, cfg);
      const double e = asymptotic_error(spec);
      const double nn = static_cast<double>(n);
      Table1Cell cell{gammas[gi].label, g.value(), n, e, nn * nn * nn * e, std::nullopt};
      for (const auto& r : table1_reference())
        if (r.gamma_index == gi && r.n == n) cell.ref = r;
      out.push_back(cell);
    }
  }
  return out;
}

std::vector<Table2Cell> compute_table2(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg) {
  std::vector<Table2Cell> out;
  const auto g = make_gamma(table2_gamma().gamma);
  for (std::size_t n : orders) {
    const auto spec = solve_spectrum(g, n, cfg);
    const Table2Ref* ref = nullptr;
    for (const auto& r : table2_reference())
      if (r.n == n) ref = &r;
    Table2Cell low{n, 0, 1, extreme_low_error(spec, 1), extreme_low_normalized(spec, 1), {}, {}};
    Table2Cell high{n, 1, n, extreme_high_error(spec, n), extreme_high_normalized(spec, n), {}, {}};
    if (ref) {
      low.ref_e = ref->e_low;
      low.ref_normalized = ref->norm_low;
      high.ref_e = ref->e_high;
      high.ref_normalized = ref->norm_high;
    }
    out.push_back(low);
    out.push_back(high);
  }
  return out;
}

std::vector<Table3Cell> compute_table3(const std::vector<std::size_t>& orders,
                                       const IterationConfig<double>& cfg) {
  std::vector<Table3Cell> out;
  const auto gammas = table3_gammas();
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    const auto g = make_gamma(gammas[gi].gamma);
    for (std::size_t n : orders) {
      const auto spec = solve_spectrum(g, n, cfg);
      double scale = 0;
      for (const auto& e : spec.entries) scale = std::max(scale, std::abs(e.lambda));
      Table3Cell cell{gammas[gi].label, g.value(), n, asymptotic_error(spec), cf_error(spec),
                      scale, std::nullopt, false, false};
      for (const auto& r : table3_reference()) {
        if (r.gamma_index == gi && r.n == n) {
          cell.ref = r;
          cell.e_below_precision = r.e < kPrecisionFloor * scale;
          cell.g_below_precision = r.g < kPrecisionFloor * scale;
        }
      }
      out.push_back(cell);
    }
  }
  return out;
}

io::OutputRecord table1_record(const std::vector<Table1Cell>& cells) {
  io::OutputRecord rec;
  rec.kind = "table1";
  rec.columns = {"gamma_label", "gamma", "n",         "E",         "n3E",
                 "published_E",     "published_n3E", "rel_dev_E", "rel_dev_n3E"};
  for (const auto& c : cells) {
    std::optional<double> pe, pn;
    if (c.ref) {
      pe = c.ref->e;
      pn = c.ref->n3e;
    }
    rec.add_row({c.gamma_label, gamma_text(c.gamma), static_cast<std::int64_t>(c.n), c.e, c.n3e,
                 opt(pe), opt(pn), deviation(c.e, pe), deviation(c.n3e, pn)});
  }
  return rec;
}

io::OutputRecord table2_record(const std::vector<Table2Cell>& cells) {
  io::OutputRecord rec;
  rec.kind = "table2";
  rec.meta["gamma"] = table2_gamma().label;
  rec.meta["normalization"] = "((n+1)/j)^4 at j=1, ((n+1)/(n+1-j))^4 at j=n";
  rec.columns = {"n",        "k",       "j",         "E",          "normalized",
                 "published_E", "published_normalized", "rel_dev_E", "rel_dev_normalized"};
  for (const auto& c : cells) {
    rec.add_row({static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(c.end),
                 static_cast<std::int64_t>(c.j), c.e, c.normalized, opt(c.ref_e),
                 opt(c.ref_normalized), deviation(c.e, c.ref_e),
                 deviation(c.normalized, c.ref_normalized)});
  }
  return rec;
}

io::OutputRecord table3_record(const std::vector<Table3Cell>& cells) {
  io::OutputRecord rec;
  rec.kind = "table3";
  rec.meta["precision_floor"] = kPrecisionFloor;
  rec.columns = {"gamma_label", "gamma",     "n",        "E",        "G",        "published_E",
                 "published_G",     "rel_dev_E", "rel_dev_G", "E_status", "G_status"};
  for (const auto& c : cells) {
    std::optional<double> pe, pg;
    if (c.ref) {
      pe = c.ref->e;
      pg = c.ref->g;
    }
    auto status = [](bool has_ref, bool below) -> std::string {
      if (!has_ref) return "no_reference";
      return below ? "below_precision" : "compared";
    };
    rec.add_row({c.gamma_label, gamma_text(c.gamma), static_cast<std::int64_t>(c.n), c.e, c.g,
                 opt(pe), opt(pg),
                 c.e_below_precision ? io::Cell{std::monostate{}} : deviation(c.e, pe),
                 c.g_below_precision ? io::Cell{std::monostate{}} : deviation(c.g, pg),
                 status(c.ref.has_value(), c.e_below_precision),
                 status(c.ref.has_value(), c.g_below_precision)});
  }
  return rec;
}

}  // namespace ctoep::tables
