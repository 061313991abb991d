#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ctoep/io.hpp"
#include "ctoep/tables.hpp"

using namespace ctoep;
using C = std::complex<double>;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(io::parse_complex("0.5"), C(0.5, 0));
  EXPECT_EQ(io::parse_complex("1/2"), C(0.5, 0));
  EXPECT_EQ(io::parse_complex("i/3"), C(0, 1.0 / 3));
  EXPECT_EQ(io::parse_complex("-i/100"), C(0, -0.01));
  EXPECT_EQ(io::parse_complex("2/5-5j/6"), C(0.4, -5.0 / 6));
  EXPECT_EQ(io::parse_complex(" 0.3 + 0.4i "), C(0.3, 0.4));
  EXPECT_EQ(io::parse_complex("1e-3i"), C(0, 1e-3));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "0.5 0.5", "1+", "i/", "--1", "1//2"}) {
    EXPECT_THROW(io::parse_complex(bad), io::ParseError) << bad;
  }
}

TEST(ParsePolar, Forms) {
  const C a = io::parse_polar("0.5:0.25");
  EXPECT_NEAR(a.real(), 0, 1e-16);
  EXPECT_NEAR(a.imag(), 0.5, 1e-16);
  EXPECT_EQ(io::parse_polar("0.5@0"), C(0.5, 0));
  EXPECT_THROW(io::parse_polar("0:0.1"), InvalidGamma);
  EXPECT_THROW(io::parse_polar("-0.5:0.1"), InvalidGamma);
  EXPECT_THROW(io::parse_polar("0.5"), io::ParseError);
}

TEST(ParseGamma, ValidatesDisk) {
  EXPECT_EQ(io::parse_gamma("i/3").value(), C(0, 1.0 / 3));
  EXPECT_NEAR(io::parse_gamma("0.9@0.5").value().real(), -0.9, 1e-15);
  EXPECT_THROW(io::parse_gamma("1.5"), InvalidGamma);
  EXPECT_THROW(io::parse_gamma("0"), InvalidGamma);
  EXPECT_THROW(io::parse_gamma("3/5+4i/5"), InvalidGamma);
}

TEST(FormatReal, RoundTrips) {
  for (double x : {0.1, 1.0 / 3, -2.5e-300, 6.02214076e23, std::numbers::pi}) {
    EXPECT_EQ(std::stod(io::format_real(x)), x);
  }
  EXPECT_EQ(io::format_real(NAN), "nan");
  EXPECT_EQ(io::format_real(-INFINITY), "-inf");
}

TEST(Output, RowArityChecked) {
  io::OutputRecord rec;
  rec.columns = {"a", "b"};
  EXPECT_THROW(rec.add_row({std::int64_t{1}}), DimensionMismatch);
}

TEST(Output, CsvQuotingAndEmptyCells) {
  io::OutputRecord rec;
  rec.kind = "demo";
  rec.columns = {"j", "x", "label"};
  rec.add_row({std::int64_t{1}, 0.5, std::string("plain")});
  rec.add_row({std::int64_t{2}, std::monostate{}, std::string("a,\"b\"")});
  std::ostringstream os;
  io::write_csv(os, rec);
  EXPECT_EQ(os.str(), "j,x,label\n1,0.5,plain\n2,,\"a,\"\"b\"\"\"\n");
}

TEST(Output, JsonSchema) {
  io::OutputRecord rec;
  rec.kind = "demo";
  rec.meta["n"] = 3;
  rec.columns = {"j", "x"};
  rec.add_row({std::int64_t{1}, 0.1});
  rec.add_row({std::int64_t{2}, NAN});
  std::ostringstream os;
  io::write_json(os, rec);
  const auto doc = nlohmann::json::parse(os.str());
  EXPECT_EQ(doc["meta"]["schema"], io::kSchemaVersion);
  EXPECT_EQ(doc["meta"]["version"], io::kToolVersion);
  EXPECT_EQ(doc["meta"]["kind"], "demo");
  EXPECT_EQ(doc["meta"]["n"], 3);
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["x"].get<double>(), 0.1);
  EXPECT_EQ(doc["rows"][1]["x"], "nan");
  EXPECT_EQ(io::parse_format("json"), io::Format::json);
  EXPECT_THROW(io::parse_format("xml"), io::ParseError);
}

TEST(Output, GammaMeta) {
  const auto m = io::gamma_meta(make_gamma(0.5));
  EXPECT_EQ(m["re"].get<double>(), 0.5);
  EXPECT_EQ(m["n_threshold"].get<double>(), 64.0);
}

TEST(Tables, DefaultOrders) {
  EXPECT_EQ(tables::default_orders(), (std::vector<std::size_t>{256, 512, 1024, 2048, 4096}));
  EXPECT_EQ(tables::default_orders(600), (std::vector<std::size_t>{256, 512}));
  EXPECT_TRUE(tables::default_orders(100).empty());
}

TEST(Tables, ReferenceShapes) {
  EXPECT_EQ(tables::table1_reference().size(), 15u);
  EXPECT_EQ(tables::table2_reference().size(), 5u);
  EXPECT_EQ(tables::table3_reference().size(), 15u);
  EXPECT_EQ(tables::table1_gammas().size(), 3u);
  EXPECT_EQ(tables::table3_gammas().size(), 3u);
  EXPECT_NEAR(tables::relative_deviation(1.02, 1.0), 0.02, 1e-15);
  EXPECT_DOUBLE_EQ(tables::relative_deviation(-1.0, -2.0), 0.5);
}

TEST(Tables, RecordsCarryDeviation) {
  const auto rec = tables::table1_record(tables::compute_table1({256}));
  ASSERT_EQ(rec.rows.size(), 3u);
  const auto col = [&](const std::string& name) {
    for (std::size_t k = 0; k < rec.columns.size(); ++k)
      if (rec.columns[k] == name) return k;
    return rec.columns.size();
  };
  const auto k = col("rel_dev_n3E");
  ASSERT_LT(k, rec.columns.size());
  for (const auto& row : rec.rows) EXPECT_LT(std::get<double>(row[k]), 0.02);
}

TEST(Tables, Deterministic) {
  std::ostringstream a, b;
  io::write_csv(a, tables::table3_record(tables::compute_table3({256})));
  io::write_csv(b, tables::table3_record(tables::compute_table3({256})));
  EXPECT_EQ(a.str(), b.str());
}
