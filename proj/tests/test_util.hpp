#ifndef NETINFO_TESTS_TEST_UTIL_HPP
#define NETINFO_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>

#include "netinfo/linalg.hpp"
#include "netinfo/orthant.hpp"

namespace netinfo::testutil {

// Random correlation matrix: rows of a Gaussian n x (n + extra) factor are
// normalised, so Sigma = F F^T has unit diagonal and is PD almost surely.
inline Matrix random_correlation(Eigen::Index n, std::mt19937_64& rng,
                                 Eigen::Index extra = 5) {
  std::normal_distribution<double> normal;
  Matrix f(n, n + extra);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n + extra; ++j) {
      f(i, j) = normal(rng);
    }
    f.row(i).normalize();
  }
  Matrix sigma = f * f.transpose();
  sigma.diagonal().setOnes();
  return sigma;
}

inline LabelVector random_labels(Eigen::Index n, std::mt19937_64& rng) {
  LabelVector c;
  c.c = Vector(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c.c(i) = (rng() & 1) ? 1.0 : -1.0;
  }
  return c;
}

inline Matrix bivariate(double rho) {
  Matrix s(2, 2);
  s << 1.0, rho, rho, 1.0;
  return s;
}

// Closed form for the bivariate orthant: P[z1 > 0, z2 > 0] with
// correlation rho is 1/4 + arcsin(rho) / (2 pi).
inline double bivariate_orthant(double rho) {
  return 0.25 + std::asin(rho) / (2.0 * 3.14159265358979323846);
}

}  // namespace netinfo::testutil

#endif  // NETINFO_TESTS_TEST_UTIL_HPP
