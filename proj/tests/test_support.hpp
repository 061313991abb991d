#ifndef CTOEP_TEST_SUPPORT_HPP
#define CTOEP_TEST_SUPPORT_HPP

// Dense LAPACK-style reference shared by the unit tests. Independent of the
// library's own oracle: Eigen's complex Schur decomposition of the dense matrix.

#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ctoep/charpoly.hpp"

namespace ctoep::reference {

inline std::vector<std::complex<double>> dense_eigenvalues(std::complex<double> gamma,
                                                           std::size_t n) {
  const auto a = dense_matrix(PerturbedMatrix<double>{gamma, n});
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(),
                                        es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

// Each value in `a` is paired with the nearest unused value in `b`; returns
// the largest paired distance. Adequate for well-separated spectra.
inline double nearest_match_distance(const std::vector<std::complex<double>>& a,
                                     std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0;
  for (const auto& x : a) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < b.size(); ++k) {
      const double d = std::abs(b[k] - x);
      if (d < bd) {
        bd = d;
        best = k;
      }
    }
    worst = std::max(worst, bd);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace ctoep::reference

#endif  // CTOEP_TEST_SUPPORT_HPP
