#include "netinfo/linalg.hpp"

#include <cmath>
#include <string>

namespace netinfo {

CholeskyFactor cholesky(const Matrix& sigma) {
  const Eigen::Index n = sigma.rows();
  if (n < 1 || sigma.cols() != n) {
    throw InvalidArgument("cholesky: matrix must be square with n >= 1");
  }
  CholeskyFactor f;
  f.L = Matrix::Zero(n, n);
  f.log_diag = Vector::Zero(n);
  // Unblocked Cholesky-Crout. Sign flips commute exactly through every
  // step, which the orthant module relies on for bit-level sign-flip
  // equivariance.
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = sigma(j, j);
    for (Eigen::Index k = 0; k < j; ++k) {
      pivot -= f.L(j, k) * f.L(j, k);
    }
    if (!(pivot > 0.0)) {
      throw NotPositiveDefinite(
          "cholesky: pivot " + std::to_string(pivot) + " at index " +
          std::to_string(j) + " (kernel matrix is singular or indefinite)");
    }
    const double ljj = std::sqrt(pivot);
    f.L(j, j) = ljj;
    f.log_diag(j) = std::log(ljj);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = sigma(i, j);
      for (Eigen::Index k = 0; k < j; ++k) {
        s -= f.L(i, k) * f.L(j, k);
      }
      f.L(i, j) = s / ljj;
    }
  }
  return f;
}

Matrix inverse_from_cholesky(CholeskyFactor& f, const Matrix& sigma) {
  const Eigen::Index n = f.order();
  Matrix linv = f.L.triangularView<Eigen::Lower>().solve(Matrix::Identity(n, n));
  Matrix inv = linv.transpose() * linv;
  f.inverse_residual = max_abs_residual(sigma, inv);
  return inv;
}

double log_det(const CholeskyFactor& f) { return 2.0 * f.log_diag.sum(); }

double normalized_det_root(const CholeskyFactor& f) {
  const double n = static_cast<double>(f.order());
  return std::exp(log_det(f) / n);
}

double max_abs_residual(const Matrix& sigma, const Matrix& sigma_inv) {
  const Eigen::Index n = sigma.rows();
  Matrix r = sigma * sigma_inv - Matrix::Identity(n, n);
  return r.cwiseAbs().maxCoeff();
}

bool residual_check(const Matrix& sigma, const Matrix& sigma_inv, double tol) {
  return max_abs_residual(sigma, sigma_inv) < tol;
}

}  // namespace netinfo
