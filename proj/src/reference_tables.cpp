// Published values, three significant digits as printed. The runs behind
// them used 1000-digit arithmetic, so entries far below binary64 resolution
// are kept for display only.

#include <array>

#include "ctoep/tables.hpp"

namespace ctoep::tables {

namespace {

constexpr std::array<GammaCase, 3> kTable1Gammas{{
    {"1/2", {0.5, 0.0}},
    {"i/3", {0.0, 1.0 / 3.0}},
    {"2/5-5i/6", {0.4, -5.0 / 6.0}},
}};

constexpr std::array<Table1Ref, 15> kTable1{{
    {0, 256, 3.01e-8, 0.504},
    {0, 512, 3.79e-9, 0.508},
    {0, 1024, 4.75e-10, 0.510},
    {0, 2048, 5.96e-11, 0.512},
    {0, 4096, 7.45e-12, 0.512},
    {1, 256, 3.00e-9, 0.050},
    {1, 512, 3.77e-10, 0.051},
    {1, 1024, 4.72e-11, 0.051},
    {1, 2048, 5.91e-12, 0.051},
    {1, 4096, 7.39e-13, 0.051},
    {2, 256, 5.58e-6, 93.6},
    {2, 512, 7.26e-7, 97.4},
    {2, 1024, 9.25e-8, 99.4},
    {2, 2048, 1.17e-8, 100.4},
    {2, 4096, 1.47e-9, 100.9},
}};

constexpr GammaCase kTable2Gamma{"i/3", {0.0, 1.0 / 3.0}};

constexpr std::array<Table2Ref, 5> kTable2{{
    {256, 1.11e-10, 0.484, 1.45e-9, 6.31},
    {512, 8.65e-12, 0.599, 9.08e-11, 6.29},
    {1024, 5.95e-13, 0.657, 5.69e-12, 6.28},
    {2048, 3.89e-14, 0.686, 3.56e-13, 6.27},
    {4096, 2.49e-15, 0.701, 2.23e-14, 6.27},
}};

constexpr std::array<GammaCase, 3> kTable3Gammas{{
    {"i/2", {0.0, 0.5}},
    {"-i/100", {0.0, -0.01}},
    {"i/1000", {0.0, 0.001}},
}};

constexpr std::array<Table3Ref, 15> kTable3{{
    {0, 256, 1.11e-8, 4.51e-5},
    {0, 512, 1.40e-9, 2.29e-5},
    {0, 1024, 1.76e-10, 1.15e-5},
    {0, 2048, 2.20e-11, 5.79e-6},
    {0, 4096, 2.75e-12, 2.90e-6},
    {1, 256, 7.85e-14, 1.52e-13},
    {1, 512, 9.88e-15, 7.70e-14},
    {1, 1024, 1.24e-15, 3.88e-14},
    {1, 2048, 1.55e-16, 1.95e-14},
    {1, 4096, 1.94e-17, 9.75e-15},
    {2, 256, 7.85e-17, 1.52e-18},
    {2, 512, 9.88e-18, 7.70e-19},
    {2, 1024, 1.24e-18, 3.88e-19},
    {2, 2048, 1.55e-19, 1.95e-19},
    {2, 4096, 1.94e-20, 9.75e-20},
}};

}  // namespace

std::span<const GammaCase> table1_gammas() { return kTable1Gammas; }
std::span<const Table1Ref> table1_reference() { return kTable1; }
GammaCase table2_gamma() { return kTable2Gamma; }
std::span<const Table2Ref> table2_reference() { return kTable2; }
std::span<const GammaCase> table3_gammas() { return kTable3Gammas; }
std::span<const Table3Ref> table3_reference() { return kTable3; }

}  // namespace ctoep::tables
